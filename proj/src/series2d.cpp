#include "kdesc/series2d.hpp"

#include <sstream>
#include <stdexcept>

#include "kdesc/triangle.hpp"

namespace kdesc {

Series2D::Series2D(int cap) : cap_(cap) {
  if (cap < 0 || cap > 64)
    throw std::invalid_argument("Series2D: cap must be in [0, 64]");
  c_.assign((cap + 1) * (cap + 2) / 2, Bigint(0));
}

Series2D Series2D::monomial(int cap, int i, int j, const Bigint& c) {
  Series2D s(cap);
  s.set_coeff(i, j, c);
  return s;
}

int Series2D::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > cap_)
    throw std::out_of_range("Series2D: coefficient (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") outside cap " +
                            std::to_string(cap_));
  return i * (cap_ + 1) - i * (i - 1) / 2 + j;
}

const Bigint& Series2D::coeff(int i, int j) const { return c_[index(i, j)]; }

void Series2D::set_coeff(int i, int j, const Bigint& v) { c_[index(i, j)] = v; }

bool Series2D::is_zero() const {
  for (const Bigint& v : c_)
    if (v != 0) return false;
  return true;
}

namespace {
void require_same_cap(const Series2D& a, const Series2D& b) {
  if (a.cap() != b.cap())
    throw std::invalid_argument("Series2D: cap mismatch");
}
}

Series2D Series2D::operator+(const Series2D& o) const {
  require_same_cap(*this, o);
  Series2D r(cap_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Series2D Series2D::operator-(const Series2D& o) const {
  require_same_cap(*this, o);
  Series2D r(cap_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Series2D Series2D::operator-() const {
  Series2D r(cap_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

bool Series2D::operator==(const Series2D& o) const {
  return cap_ == o.cap_ && c_ == o.c_;
}

Series2D Series2D::mul(const Series2D& o, bool parallel) const {
  require_same_cap(*this, o);
  Series2D r(cap_);
  int cells = static_cast<int>(r.c_.size());
  (void)parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int cell = 0; cell < cells; ++cell) {
    // invert the row-major triangular index
    int i = 0, base = 0;
    while (base + (cap_ + 1 - i) <= cell) base += cap_ + 1 - i, ++i;
    int j = cell - base;
    Bigint acc = 0;
    for (int p = 0; p <= i; ++p)
      for (int q = 0; q <= j; ++q) {
        const Bigint& a = c_[p * (cap_ + 1) - p * (p - 1) / 2 + q];
        if (a == 0) continue;
        const Bigint& b =
            o.c_[(i - p) * (cap_ + 1) - (i - p) * (i - p - 1) / 2 + (j - q)];
        if (b == 0) continue;
        acc += a * b;
      }
    r.c_[cell] = acc;
  }
  return r;
}

std::string Series2D::to_csv() const {
  std::ostringstream os;
  os << "i,j,coefficient\n";
  for (int i = 0; i <= cap_; ++i)
    for (int j = 0; j + i <= cap_; ++j)
      os << i << ',' << j << ',' << coeff(i, j).str() << '\n';
  return os.str();
}

Series2D substitute_diagonal(const Series2D& univariate, int cap) {
  if (cap != univariate.cap())
    throw std::invalid_argument("substitute_diagonal: cap mismatch");
  for (int i = 0; i <= cap; ++i)
    for (int j = 1; i + j <= cap; ++j)
      if (univariate.coeff(i, j) != 0)
        throw std::invalid_argument(
            "substitute_diagonal: input is not univariate");
  Series2D r(cap);
  for (int n = 0; 2 * n <= cap; ++n) r.set_coeff(n, n, univariate.coeff(n, 0));
  return r;
}

SeriesTriple build_series(const Triangle& tri, int cap) {
  if (tri.k() != 3)
    throw std::invalid_argument("build_series: needs the k = 3 triangle");
  if (tri.max_n() < cap)
    throw std::invalid_argument("build_series: triangle only covers n = " +
                                std::to_string(tri.max_n()) +
                                ", need " + std::to_string(cap));
  SeriesTriple out{Series2D(cap), Series2D(cap), Series2D(cap)};
  for (int n = 1; n <= cap; ++n)
    for (int m = 1; m <= n && m + n <= cap; ++m)
      out.T.set_coeff(m, n, tri.entry(m, n));
  for (int n = 1; n <= cap; ++n) out.F.set_coeff(0, n, tri.row_sum(n));
  for (int n = 1; n + 1 <= tri.max_n() && n <= cap; ++n)
    out.G.set_coeff(n, 0, tri.entry(n + 1, n + 1));
  return out;
}

IdentityReport verify_gen_identity(int cap, bool parallel) {
  if (cap < 8)
    throw std::invalid_argument("verify_gen_identity: cap must be >= 8");
  Triangle tri(3, cap);
  SeriesTriple s = build_series(tri, cap);

  Series2D x = Series2D::monomial(cap, 1, 0, 1);
  Series2D y = Series2D::monomial(cap, 0, 1, 1);
  Series2D one = Series2D::monomial(cap, 0, 0, 1);
  Series2D xm1 = x - one;

  Series2D x2y2 = x.mul(x, parallel).mul(y, parallel).mul(y, parallel);
  Series2D sq1mx = xm1.mul(xm1, parallel);
  Series2D p = x.mul(y, parallel).mul(x2y2 - sq1mx, parallel);
  Series2D q = xm1.mul(x, parallel)
                   .mul(x, parallel)
                   .mul(y, parallel)
                   .mul(x.mul(y, parallel) + xm1, parallel);
  Series2D r = xm1.mul(x, parallel).mul(y, parallel).mul(sq1mx - x2y2, parallel);
  Series2D mult = x2y2.mul(x, parallel).mul(y, parallel) + xm1.mul(sq1mx, parallel);

  Series2D lhs = s.T.mul(mult, parallel);
  Series2D rhs = p.mul(s.F, parallel) +
                 q.mul(substitute_diagonal(s.G, cap), parallel) + r;
  Series2D resid = lhs - rhs;

  IdentityReport rep;
  rep.cap = cap;
  rep.max_residual = 0;
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) {
      const Bigint& v = resid.coeff(i, j);
      if (v == 0) continue;
      if (i + j <= cap - 4) {
        Bigint a = v < 0 ? Bigint(-v) : v;
        if (a > rep.max_residual) rep.max_residual = a;
      } else {
        rep.spill.emplace_back(i, j, v);
      }
    }
  return rep;
}

}
