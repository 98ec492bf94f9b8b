#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kdesc {

using Bigint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Bigint factorial(int n);

/* Binomial coefficient with the edge conventions used throughout:
 * b < 0 gives 0; b == 0 gives 1 for a >= -1 and 0 below that;
 * a < b gives 0 (including all a < 0 with b >= 1). */
Bigint binom(long long a, long long b);

double to_double(const Bigint& v);
double to_double(const Rational& v);

}
