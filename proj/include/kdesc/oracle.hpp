#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kdesc {

enum class Grouping { by_set, by_set_and_first, by_set_and_first_and_last };

// the pattern k, k-1, ..., 1
std::vector<int> decreasing_pattern(int k);

/* Enumeration request: count permutations of size n by the set of start
 * positions of consecutive occurrences of `pattern`, optionally split by the
 * first entry or by the (first, last) pair. */
struct PatternQuery {
  std::vector<int> pattern;
  int n = 0;
  Grouping grouping = Grouping::by_set;
};

struct OracleKey {
  std::vector<int> set;
  int m = 0;   // first-entry value (doubles as m1 under joint grouping)
  int m2 = 0;  // last-entry value under joint grouping
  bool operator<(const OracleKey& other) const;
  bool operator==(const OracleKey& other) const {
    return set == other.set && m == other.m && m2 == other.m2;
  }
  std::string str(Grouping grouping) const;
};

struct OracleReport {
  std::vector<int> pattern;
  int n = 0;
  Grouping grouping = Grouping::by_set;
  std::map<OracleKey, long long> counts;
  long long total = 0;  // always n!

  long long at(const OracleKey& key) const;
  std::string to_json() const;
};

inline constexpr int kDefaultOracleCap = 11;

// 1-based start positions of consecutive occurrences of pattern in w
std::vector<int> occurrence_set(const std::vector<int>& w,
                                const std::vector<int>& pattern);

/* Advance w to its lexicographic successor in place. Returns the smallest
 * 0-based index whose entry changed, or -1 when w was already the last
 * permutation (w is left untouched in that case). */
int advance(std::vector<int>& w);

OracleReport enumerate_serial(const PatternQuery& query,
                              int cap = kDefaultOracleCap);

/* Same result as enumerate_serial; the permutation stream is partitioned by
 * first-entry value and the per-partition tallies merge in value order, so
 * the output does not depend on thread count. */
OracleReport enumerate(const PatternQuery& query, int cap = kDefaultOracleCap);

/* joint[m1-1][m2-1] = number of permutations of size n with no occurrence of
 * the decreasing pattern of length k, first entry m1 and last entry m2. */
std::vector<std::vector<long long>> joint_counts(int k, int n,
                                                 int cap = kDefaultOracleCap);

}
