#include "kdesc/bigint.hpp"

#include <stdexcept>

namespace kdesc {

Bigint factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Bigint r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Bigint binom(long long a, long long b) {
  if (b < 0) return 0;
  if (b == 0) return a >= -1 ? 1 : 0;
  if (a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Bigint r = 1;
  for (long long i = 0; i < b; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

double to_double(const Bigint& v) { return v.convert_to<double>(); }
double to_double(const Rational& v) { return v.convert_to<double>(); }

}
