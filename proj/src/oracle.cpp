#include "kdesc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kdesc {

std::vector<int> decreasing_pattern(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = k - i;
  return p;
}

bool OracleKey::operator<(const OracleKey& other) const {
  if (set != other.set) return set < other.set;
  if (m != other.m) return m < other.m;
  return m2 < other.m2;
}

std::string OracleKey::str(Grouping grouping) const {
  std::ostringstream os;
  os << "I=[";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) os << ',';
    os << set[i];
  }
  os << ']';
  if (grouping == Grouping::by_set_and_first) {
    os << ";m=" << m;
  } else if (grouping == Grouping::by_set_and_first_and_last) {
    os << ";m1=" << m << ";m2=" << m2;
  }
  return os.str();
}

long long OracleReport::at(const OracleKey& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

std::string OracleReport::to_json() const {
  nlohmann::json j;
  j["pattern"] = pattern;
  j["n"] = n;
  switch (grouping) {
    case Grouping::by_set: j["grouping"] = "by_set"; break;
    case Grouping::by_set_and_first: j["grouping"] = "by_set_and_first"; break;
    case Grouping::by_set_and_first_and_last:
      j["grouping"] = "by_set_and_first_and_last";
      break;
  }
  j["total"] = total;
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [key, cnt] : counts) c[key.str(grouping)] = cnt;
  j["counts"] = c;
  return j.dump(2);
}

namespace {

void validate_pattern(const std::vector<int>& pattern) {
  const int k = static_cast<int>(pattern.size());
  if (k < 2) throw std::invalid_argument("pattern length must be at least 2");
  std::vector<char> seen(k + 1, 0);
  for (int v : pattern) {
    if (v < 1 || v > k || seen[v])
      throw std::invalid_argument("pattern must be a permutation of 1..k");
    seen[v] = 1;
  }
}

// inverse[j] = position of value j+1 in the pattern; an occurrence at start s
// means w[s+inverse[0]] < w[s+inverse[1]] < ... < w[s+inverse[k-1]]
std::vector<int> pattern_inverse(const std::vector<int>& pattern) {
  std::vector<int> inv(pattern.size());
  for (size_t i = 0; i < pattern.size(); ++i) inv[pattern[i] - 1] = (int)i;
  return inv;
}

int advance_from(std::vector<int>& w, int fix) {
  const int n = static_cast<int>(w.size());
  int i = n - 2;
  while (i >= fix && w[i] >= w[i + 1]) --i;
  if (i < fix) return -1;
  int j = n - 1;
  while (w[j] <= w[i]) --j;
  std::swap(w[i], w[j]);
  std::reverse(w.begin() + i + 1, w.end());
  return i;
}

/* Enumerate every permutation of w's multiset with positions [0, fix) held
 * frozen, tallying into buf[(mask*n + first-1)*n + last-1] where mask has
 * bit s set iff the pattern occurs at 0-based start s. Only windows touching
 * the changed suffix are rescanned after each step. */
void enumerate_block(std::vector<int>& w, int fix, int k,
                     const std::vector<int>& inv, long long* buf) {
  const int n = static_cast<int>(w.size());
  const int nw = n - k + 1 > 0 ? n - k + 1 : 0;
  auto match = [&](int s) {
    for (int j = 0; j + 1 < k; ++j)
      if (w[s + inv[j]] >= w[s + inv[j + 1]]) return false;
    return true;
  };
  std::uint64_t mask = 0;
  for (int s = 0; s < nw; ++s)
    if (match(s)) mask |= std::uint64_t(1) << s;
  for (;;) {
    buf[(mask * n + (w[0] - 1)) * n + (w[n - 1] - 1)]++;
    int p = advance_from(w, fix);
    if (p < 0) break;
    int lo = p - k + 1 > 0 ? p - k + 1 : 0;
    for (int s = lo; s < nw; ++s) {
      if (match(s))
        mask |= std::uint64_t(1) << s;
      else
        mask &= ~(std::uint64_t(1) << s);
    }
  }
}

std::vector<int> mask_to_set(std::uint64_t mask) {
  std::vector<int> set;
  for (int b = 0; mask; ++b, mask >>= 1)
    if (mask & 1) set.push_back(b + 1);
  return set;
}

OracleReport reduce_buffer(const std::vector<long long>& buf,
                           const PatternQuery& query) {
  OracleReport rep;
  rep.pattern = query.pattern;
  rep.n = query.n;
  rep.grouping = query.grouping;
  const int n = query.n;
  const size_t n2 = static_cast<size_t>(n) * n;
  for (size_t idx = 0; idx < buf.size(); ++idx) {
    if (!buf[idx]) continue;
    OracleKey key;
    key.set = mask_to_set(idx / n2);
    int first = static_cast<int>((idx / n) % n) + 1;
    int last = static_cast<int>(idx % n) + 1;
    if (query.grouping == Grouping::by_set_and_first) {
      key.m = first;
    } else if (query.grouping == Grouping::by_set_and_first_and_last) {
      key.m = first;
      key.m2 = last;
    }
    rep.counts[key] += buf[idx];
    rep.total += buf[idx];
  }
  return rep;
}

size_t buffer_size(int n, int k) {
  const int nw = n - k + 1 > 0 ? n - k + 1 : 0;
  return (size_t(1) << nw) * n * n;
}

void validate_query(const PatternQuery& query, int cap) {
  validate_pattern(query.pattern);
  if (query.n < 1) throw std::invalid_argument("n must be positive");
  if (query.n > cap) {
    std::ostringstream os;
    os << "enumeration over S_" << query.n << " refused: cap is " << cap
       << " (" << query.n << "! permutations would be visited)";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

std::vector<int> occurrence_set(const std::vector<int>& w,
                                const std::vector<int>& pattern) {
  validate_pattern(pattern);
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(pattern.size());
  const std::vector<int> inv = pattern_inverse(pattern);
  std::vector<int> out;
  for (int s = 0; s + k <= n; ++s) {
    bool ok = true;
    for (int j = 0; ok && j + 1 < k; ++j)
      ok = w[s + inv[j]] < w[s + inv[j + 1]];
    if (ok) out.push_back(s + 1);
  }
  return out;
}

int advance(std::vector<int>& w) { return advance_from(w, 0); }

OracleReport enumerate_serial(const PatternQuery& query, int cap) {
  validate_query(query, cap);
  const int n = query.n;
  const int k = static_cast<int>(query.pattern.size());
  const std::vector<int> inv = pattern_inverse(query.pattern);
  std::vector<long long> buf(buffer_size(n, k), 0);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  enumerate_block(w, 0, k, inv, buf.data());
  return reduce_buffer(buf, query);
}

OracleReport enumerate(const PatternQuery& query, int cap) {
  validate_query(query, cap);
  const int n = query.n;
  const int k = static_cast<int>(query.pattern.size());
  const std::vector<int> inv = pattern_inverse(query.pattern);
  const size_t bufsz = buffer_size(n, k);
  std::vector<std::vector<long long>> parts(n);
#pragma omp parallel for schedule(dynamic)
  for (int v = 1; v <= n; ++v) {
    std::vector<long long>& part = parts[v - 1];
    part.assign(bufsz, 0);
    std::vector<int> w;
    w.reserve(n);
    w.push_back(v);
    for (int x = 1; x <= n; ++x)
      if (x != v) w.push_back(x);
    enumerate_block(w, 1, k, inv, part.data());
  }
  std::vector<long long> buf(bufsz, 0);
  for (int v = 1; v <= n; ++v)
    for (size_t i = 0; i < bufsz; ++i) buf[i] += parts[v - 1][i];
  return reduce_buffer(buf, query);
}

std::vector<std::vector<long long>> joint_counts(int k, int n, int cap) {
  PatternQuery q{decreasing_pattern(k), n,
                 Grouping::by_set_and_first_and_last};
  OracleReport rep = enumerate(q, cap);
  std::vector<std::vector<long long>> table(n, std::vector<long long>(n, 0));
  for (const auto& [key, cnt] : rep.counts)
    if (key.set.empty()) table[key.m - 1][key.m2 - 1] = cnt;
  return table;
}

}
