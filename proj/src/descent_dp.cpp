#include "kdesc/descent_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kdesc {

DescentSpec::DescentSpec(int k_in, std::vector<int> set_in)
    : k(k_in), set(std::move(set_in)) {
  if (k < 2) throw std::invalid_argument("run length must be at least 2");
  for (size_t j = 0; j < set.size(); ++j) {
    if (set[j] < 1) throw std::invalid_argument("set entries must be >= 1");
    if (j > 0 && set[j] <= set[j - 1])
      throw std::invalid_argument("set must be strictly increasing");
  }
}

int DescentSpec::t() const {
  return set.empty() ? 0 : set.back() + k - 1;
}

/* Build permutations by appending one position at a time. State after
 * position i: (relative rank r of the last entry among the first i, length l
 * of the decreasing suffix, capped at k). Appending a new entry of relative
 * rank r' extends the suffix iff r' <= r, so the transitions collapse into
 * prefix/suffix sums over r. Once position i >= k is placed, the window
 * starting at i-k+1 is fully decreasing iff l == k, and states violating the
 * target set are dropped. Returns the final distribution over r summed over
 * l; rank equals value once all n entries are placed. */
std::vector<Bigint> count_by_last(const DescentSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Bigint> out(n);
  if (spec.t() > n) return out;

  const int k = spec.k;
  std::vector<char> in_set(n + 1, 0);
  for (int s : spec.set) in_set[s] = 1;

  // cur[r][l], ranks r = 1..i, levels l = 1..k
  std::vector<std::vector<Bigint>> cur(2, std::vector<Bigint>(k + 1));
  cur[1][1] = 1;

  std::vector<Bigint> prefix_all;
  std::vector<std::vector<Bigint>> suf(k + 1);

  for (int i = 2; i <= n; ++i) {
    const int old_ranks = i - 1;

    prefix_all.assign(old_ranks + 1, Bigint(0));
    for (int r = 1; r <= old_ranks; ++r) {
      prefix_all[r] = prefix_all[r - 1];
      for (int l = 1; l <= k; ++l) prefix_all[r] += cur[r][l];
    }
    for (int l = 1; l <= k; ++l) {
      suf[l].assign(old_ranks + 2, Bigint(0));
      for (int r = old_ranks; r >= 1; --r)
        suf[l][r] = suf[l][r + 1] + cur[r][l];
    }

    std::vector<std::vector<Bigint>> nxt(i + 1,
                                         std::vector<Bigint>(k + 1));
    for (int rp = 1; rp <= i; ++rp) {
      nxt[rp][1] = prefix_all[rp - 1];
      for (int j = 2; j < k; ++j)
        nxt[rp][j] = (rp <= old_ranks) ? suf[j - 1][rp] : Bigint(0);
      if (rp <= old_ranks) nxt[rp][k] = suf[k - 1][rp] + suf[k][rp];
    }

    if (i >= k) {
      int s = i - k + 1;
      if (in_set[s]) {
        for (int rp = 1; rp <= i; ++rp)
          for (int l = 1; l < k; ++l) nxt[rp][l] = 0;
      } else {
        for (int rp = 1; rp <= i; ++rp) nxt[rp][k] = 0;
      }
    }

    cur = std::move(nxt);
  }

  for (int r = 1; r <= n; ++r)
    for (int l = 1; l <= k; ++l) out[r - 1] += cur[r][l];
  return out;
}

Bigint count_with_set(const DescentSpec& spec, int n) {
  Bigint total = 0;
  for (const Bigint& v : count_by_last(spec, n)) total += v;
  return total;
}

std::vector<int> reversed_set(const DescentSpec& spec, int n) {
  std::vector<int> out;
  out.reserve(spec.set.size());
  for (auto it = spec.set.rbegin(); it != spec.set.rend(); ++it)
    out.push_back(n + 2 - spec.k - *it);
  return out;
}

std::vector<Bigint> parametrized_row(const DescentSpec& spec, int n) {
  std::vector<Bigint> out(n);
  if (spec.t() > n) return out;
  DescentSpec rev(spec.k, reversed_set(spec, n));
  std::vector<Bigint> by_last = count_by_last(rev, n);
  // reverse-complement swaps (first element = m) with (last element = n+1-m)
  for (int m = 1; m <= n; ++m) out[m - 1] = std::move(by_last[n - m]);
  return out;
}

Bigint parametrized_count(const DescentSpec& spec, int m, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (m < 1 || m > n) throw std::invalid_argument("first entry out of range");
  if (spec.t() > n) return 0;
  DescentSpec rev(spec.k, reversed_set(spec, n));
  return count_by_last(rev, n)[n - m];
}

GeneralTable::GeneralTable(DescentSpec spec, int max_n, bool parallel)
    : spec_(std::move(spec)) {
  if (max_n < 1) throw std::invalid_argument("max_n must be positive");
  rows_.resize(max_n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Bigint> by_last = count_by_last(spec_, n);
    std::reverse(by_last.begin(), by_last.end());
    rows_[n - 1] = std::move(by_last);
  }
}

const std::vector<Bigint>& GeneralTable::row(int n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("row index");
  return rows_[n - 1];
}

Bigint GeneralTable::row_sum(int n) const {
  Bigint total = 0;
  for (const Bigint& v : row(n)) total += v;
  return total;
}

}
