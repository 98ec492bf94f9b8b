#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "kdesc/bigint.hpp"

namespace kdesc {

class Triangle;

// dense bivariate polynomial truncated at a total degree cap, exact integers
class Series2D {
 public:
  explicit Series2D(int cap);
  static Series2D monomial(int cap, int i, int j, const Bigint& c);

  int cap() const { return cap_; }
  const Bigint& coeff(int i, int j) const;
  void set_coeff(int i, int j, const Bigint& v);
  bool is_zero() const;

  Series2D operator+(const Series2D& o) const;
  Series2D operator-(const Series2D& o) const;
  Series2D operator-() const;
  bool operator==(const Series2D& o) const;

  // truncated product; terms with total degree above the cap are dropped.
  // the parallel path splits the output cells across threads and is
  // coefficient-identical to the serial one
  Series2D mul(const Series2D& o, bool parallel = true) const;
  Series2D operator*(const Series2D& o) const { return mul(o); }

  std::string to_csv() const;  // "i,j,coefficient", all cells in cap order

 private:
  int index(int i, int j) const;
  int cap_;
  std::vector<Bigint> c_;
};

// substitute z -> xy into a univariate polynomial stored along x
Series2D substitute_diagonal(const Series2D& univariate, int cap);

/* counting series up to the cap:
 *   T: coefficient of x^m y^n is the count with first entry m at size n,
 *      for m <= n (zero above the diagonal)
 *   F: coefficient of y^n (n >= 1) is the full count at size n
 *   G: univariate, coefficient of z^n (n >= 1) is the size-(n+1) corner
 *      count (the diagonal sequence 1, 1, 3, 9, 39, 189, ...) */
struct SeriesTriple {
  Series2D T, F, G;
};
SeriesTriple build_series(const Triangle& tri, int cap);

/* Residual of T*(x^3 y^3 - (1-x)^3) - (P*F + Q*G(xy) + R) for the k = 3
 * factor polynomials. Coefficients with total degree <= cap-4 must vanish;
 * cells above that margin can carry truncation spill and are reported. */
struct IdentityReport {
  int cap = 0;
  Bigint max_residual;  // over the safe region, total degree <= cap-4
  std::vector<std::tuple<int, int, Bigint>> spill;  // nonzero cells above it
};
IdentityReport verify_gen_identity(int cap, bool parallel = true);

}
