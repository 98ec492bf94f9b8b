#pragma once

#include <vector>

#include "kdesc/bigint.hpp"

namespace kdesc {

/* A target occurrence set: the permutations of interest are those whose
 * maximal decreasing runs of length >= k start exactly at the indices in
 * `set` (i.e. position i starts a run of k decreasing entries iff i is in
 * the set). */
struct DescentSpec {
  int k;
  std::vector<int> set;  // strictly increasing, entries >= 1

  DescentSpec(int k, std::vector<int> set);
  // largest index that must host a full run, plus the run tail; 0 when empty
  int t() const;
};

// number of permutations of size n realizing the set exactly
Bigint count_with_set(const DescentSpec& spec, int n);

// the same count split by the value of the last element; result[v-1] counts
// permutations ending with v
std::vector<Bigint> count_by_last(const DescentSpec& spec, int n);

// image of the set under reverse-complement at ambient size n
std::vector<int> reversed_set(const DescentSpec& spec, int n);

// number of permutations realizing the set with the extra condition w(1) = m
Bigint parametrized_count(const DescentSpec& spec, int m, int n);

// all first-element conditionings at once; result[m-1] = count with w(1) = m
std::vector<Bigint> parametrized_row(const DescentSpec& spec, int n);

/* Table of first-element-conditioned counts for the reverse-complement
 * image of the set at each row size: row n (1 <= n <= max_n) has entries
 * m = 1..n, entry m counting permutations of size n with w(1) = m whose
 * run set is reversed_set(spec, n). Anchoring the runs near the right end
 * this way is what makes consecutive rows obey the k-fold difference
 * recurrence. Rows whose reflected set does not fit are all zeros; row
 * sums equal count_with_set once the set fits. Rows are independent DP
 * runs and build in parallel when requested. */
class GeneralTable {
public:
  GeneralTable(DescentSpec spec, int max_n, bool parallel = true);

  const DescentSpec& spec() const { return spec_; }
  int max_n() const { return static_cast<int>(rows_.size()); }
  const std::vector<Bigint>& row(int n) const;
  Bigint row_sum(int n) const;

private:
  DescentSpec spec_;
  std::vector<std::vector<Bigint>> rows_;
};

}
