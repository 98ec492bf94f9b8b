#include "kdesc/triangle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kdesc {

Triangle::Triangle(int k, int max_n) : k_(k) {
  if (k < 2) throw std::invalid_argument("triangle: k must be >= 2");
  if (max_n < 1) throw std::invalid_argument("triangle: max_n must be >= 1");
  rows_.reserve(max_n);
  sums_.reserve(max_n);

  for (int n = 1; n <= std::min(k, max_n); ++n) {
    std::vector<Bigint> row(n, factorial(n - 1));
    if (n == k) row[n - 1] = factorial(k - 1) - 1;
    Bigint s = 0;
    for (const auto& v : row) s += v;
    rows_.push_back(std::move(row));
    sums_.push_back(std::move(s));
  }

  // row n+k from row n: one backward-filled antidifference anchored at a
  // trailing zero, then forward-filled ones anchored at leading zeros, and a
  // final forward fill anchored at the previous row's sum
  std::vector<Bigint> cur, next;
  for (int n = 1; n + k <= max_n; ++n) {
    const auto& base = rows_[n - 1];
    cur.assign(n + 1, Bigint(0));
    for (int j = n - 1; j >= 0; --j) cur[j] = cur[j + 1] - base[j];
    for (int level = 2; level < k; ++level) {
      next.assign(n + level, Bigint(0));
      for (size_t j = 0; j + 1 < next.size(); ++j) next[j + 1] = next[j] + cur[j];
      cur.swap(next);
    }
    next.assign(n + k, Bigint(0));
    next[0] = sums_[n + k - 2];
    for (size_t j = 0; j + 1 < next.size(); ++j) next[j + 1] = next[j] + cur[j];
    Bigint s = 0;
    for (const auto& v : next) s += v;
    rows_.push_back(std::move(next));
    sums_.push_back(std::move(s));
  }
}

const std::vector<Bigint>& Triangle::row(int n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("triangle: row out of range");
  return rows_[n - 1];
}

const Bigint& Triangle::entry(int m, int n) const {
  const auto& r = row(n);
  if (m < 1 || m > n) throw std::out_of_range("triangle: entry out of range");
  return r[m - 1];
}

const Bigint& Triangle::row_sum(int n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("triangle: row out of range");
  return sums_[n - 1];
}

Bigint Triangle::f(int n) const {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return row_sum(n);
}

std::string Triangle::to_csv() const {
  std::ostringstream out;
  out << "k,n,m,value\n";
  for (int n = 1; n <= max_n(); ++n)
    for (int m = 1; m <= n; ++m)
      out << k_ << ',' << n << ',' << m << ',' << rows_[n - 1][m - 1] << '\n';
  return out.str();
}

std::string Triangle::to_json() const {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (int n = 1; n <= max_n(); ++n)
    for (int m = 1; m <= n; ++m) {
      if (!first) out << ",";
      first = false;
      out << "{\"k\":" << k_ << ",\"n\":" << n << ",\"m\":" << m
          << ",\"value\":\"" << rows_[n - 1][m - 1] << "\"}";
    }
  out << "]";
  return out.str();
}

std::vector<Bigint> kth_difference(std::vector<Bigint> row, int k) {
  if (static_cast<int>(row.size()) <= k)
    throw std::invalid_argument("kth_difference: row too short");
  for (int pass = 0; pass < k; ++pass) {
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return row;
}

Bigint first_entry_alternating(const Triangle& tri, int m, int n) {
  if (m < 1 || m > n) throw std::out_of_range("first_entry_alternating: bad m");
  const int k = tri.k();
  Bigint acc = tri.f(n - 1);  // binom(m-1, 0) = 1
  for (long long j = 1;; ++j) {
    const long long lo = j * k - 1, hi = j * k;
    if (lo > m - 1 && n - hi - 1 < 0) break;
    acc -= binom(m - 1, lo) * tri.f(n - static_cast<int>(j) * k);
    acc += binom(m - 1, hi) * tri.f(n - static_cast<int>(j) * k - 1);
  }
  return acc;
}

namespace {
// triangle lookup that vanishes outside 1 <= m <= n
Bigint entry_or_zero(const Triangle& tri, int m, int n) {
  if (n < 1 || m < 1 || m > n) return 0;
  return tri.entry(m, n);
}
}

std::pair<Bigint, Bigint> sandwich_bounds(const Triangle& tri, int m1, int m2, int n) {
  if (m1 < 1 || m1 > m2 || m2 > n) throw std::invalid_argument("sandwich_bounds: need 1 <= m1 <= m2 <= n");
  if (n > tri.max_n()) throw std::out_of_range("sandwich_bounds: triangle too small");
  const int k = tri.k();
  Bigint lower = 0, upper = 0;
  for (int l = 1; l <= m1; ++l) {
    const Bigint tight = entry_or_zero(tri, std::min(n - l, n + 1 - m2), n - l);
    const Bigint loose = entry_or_zero(tri, std::max(1, n - l + 1 - m2), n - l);
    if (l % k == 1) {
      lower += binom(m1 - 2, l - 1) * tight;
      upper += binom(m1 - 1, l - 1) * loose;
    } else if (l % k == 0) {
      lower -= binom(m1 - 1, l - 1) * loose;
      upper -= binom(m1 - 2, l - 1) * tight;
    }
  }
  return {lower, upper};
}

Bigint diagonal_value(const Triangle& tri, int n) {
  if (n < 0) throw std::out_of_range("diagonal_value: negative index");
  return tri.entry(n + 1, n + 1);
}

bool diagonal_identity_first(const Triangle& tri, int n) {
  return tri.entry(n - 1, n) == diagonal_value(tri, n - 1) + diagonal_value(tri, n - 2);
}

bool diagonal_identity_second(const Triangle& tri, int n) {
  return tri.entry(n - 2, n) == diagonal_value(tri, n - 1) + 2 * diagonal_value(tri, n - 2);
}

}
