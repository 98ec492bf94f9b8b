#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kdesc/bigint.hpp"

namespace kdesc {

/* Exact counts of permutations of S_n containing no run of k consecutive
 * strictly decreasing entries, grouped by the value of the first element.
 * entry(m, n) is the count for permutations of size n starting with m;
 * row n has entries m = 1..n and rows are built bottom-up: rows 1..k come
 * from factorials, and row n+k is derived from row n by k antidifference
 * sweeps with fixed boundary anchors. Total cost O(k * max_n^2) additions.
 */
class Triangle {
public:
  Triangle(int k, int max_n);

  int k() const { return k_; }
  int max_n() const { return static_cast<int>(rows_.size()); }

  const Bigint& entry(int m, int n) const;
  const std::vector<Bigint>& row(int n) const;
  const Bigint& row_sum(int n) const;

  // row-sum sequence extended by the empty-permutation convention:
  // f(0) = 1 and f(n) = 0 for n < 0
  Bigint f(int n) const;

  std::string to_csv() const;
  std::string to_json() const;

private:
  int k_;
  std::vector<std::vector<Bigint>> rows_;
  std::vector<Bigint> sums_;
};

// forward difference (a[i+1] - a[i]) iterated k times
std::vector<Bigint> kth_difference(std::vector<Bigint> row, int k);

/* entry(m, n) recovered from earlier row sums by the alternating binomial
 * expansion over the length of the initial decreasing run; must equal the
 * triangle entry exactly. */
Bigint first_entry_alternating(const Triangle& tri, int m, int n);

/* Lower/upper bracket for the number of avoiders with w(1) = m1 and
 * w(n) = m2 (no exact formula is available for the two-sided condition). */
std::pair<Bigint, Bigint> sandwich_bounds(const Triangle& tri, int m1, int m2, int n);

// avoiders of size n+1 that start with their maximum (the shifted diagonal)
Bigint diagonal_value(const Triangle& tri, int n);

// near-diagonal identities for k = 3 tying rows to the diagonal sequence
bool diagonal_identity_first(const Triangle& tri, int n);   // entry(n-1,n) = g(n-1)+g(n-2)
bool diagonal_identity_second(const Triangle& tri, int n);  // entry(n-2,n) = g(n-1)+2g(n-2)

}
