#pragma once

// Local-minimum scans over label sequences. Templated on the key type so the
// verifiers (exact rationals) and the pattern search (integer ranks) share
// one implementation of every threshold condition.

#include <cstddef>
#include <span>
#include <vector>

namespace gel {

// Positions first .. first+count-1 (taken cyclically for cycles).
struct Run {
  int first = 0;
  int count = 0;
};

template <class K>
std::vector<Run> path_minimum_runs(std::span<const K> x) {
  std::vector<Run> out;
  const int len = static_cast<int>(x.size());
  int i = 0;
  while (i < len) {
    int j = i;
    while (j + 1 < len && x[j + 1] == x[i]) ++j;
    int count = j - i + 1;
    bool lower_left = i == 0 || x[i - 1] > x[i];
    bool lower_right = j == len - 1 || x[j + 1] > x[i];
    if (count < len && lower_left && lower_right) out.push_back({i, count});
    i = j + 1;
  }
  return out;
}

template <class K>
std::vector<Run> cycle_minimum_runs(std::span<const K> x) {
  std::vector<Run> out;
  const int len = static_cast<int>(x.size());
  int start = -1;
  for (int i = 0; i < len; ++i)
    if (x[i] != x[(i + len - 1) % len]) {
      start = i;
      break;
    }
  if (start < 0) return out;  // constant cycle: no proper sub-path
  int done = 0;
  int i = start;
  while (done < len) {
    int count = 1;
    while (count < len && x[(i + count) % len] == x[i]) ++count;
    const K& prev = x[(i + len - 1) % len];
    const K& next = x[(i + count) % len];
    if (prev > x[i] && next > x[i]) out.push_back({i, count});
    done += count;
    i = (i + count) % len;
  }
  return out;
}

inline bool touches_endpoint(const Run& r, std::size_t len) {
  return r.first == 0 || r.first + r.count == static_cast<int>(len);
}

template <class K>
std::vector<Run> imin_runs(std::span<const K> x, const K& zero) {
  std::vector<Run> out;
  for (const Run& r : path_minimum_runs<K>(x))
    if (x[r.first] < zero || !touches_endpoint(r, x.size())) out.push_back(r);
  return out;
}

// Thresholds of the typed conditions, expressed in the key domain.
template <class K>
struct Thresholds {
  K zero{};
  K half{};
  K two_thirds{};
  K three_quarters{};
};

namespace cond {

// (a) for a 2-simple path between type-2 vertices.
template <class K>
bool decent_a(std::span<const K> x, const Thresholds<K>& t) {
  if (x.size() < 3) return false;
  auto im = imin_runs<K>(x, t.zero);
  if (im.size() >= 2) return true;
  for (const Run& r : im) {
    bool left = false, right = false;
    for (int i = 0; i < r.first; ++i) left = left || x[i] > t.zero;
    for (int i = r.first + r.count; i < static_cast<int>(x.size()); ++i)
      right = right || x[i] > t.zero;
    if (left && right) return true;
  }
  return false;
}

// (b) for a 1-simple path, x[0] being the edge at the type-1 end.
template <class K>
bool decent_b(std::span<const K> x, const Thresholds<K>& t) {
  if (x.size() < 2) return false;
  for (const Run& r : imin_runs<K>(x, t.zero))
    if (r.first > 0) return true;
  return false;
}

// Gluable (a): x = (phi(y v1), phi(v1 v2)).
template <class K>
bool glu_a(std::span<const K> x, const Thresholds<K>& t) {
  return t.two_thirds < x[0] && x[0] <= t.three_quarters && t.three_quarters < x[1];
}

// Gluable (b): some edge at least 2/3.
template <class K>
bool glu_b(std::span<const K> x, const Thresholds<K>& t) {
  for (const K& v : x)
    if (v >= t.two_thirds) return true;
  return false;
}

// Gluable (d) conditions; x[0] is the edge at the root.
template <class K>
bool edge_at_root_is_minimum(std::span<const K> x) {
  return x.size() >= 2 && x[1] > x[0];
}

template <class K>
bool d2i(std::span<const K> x, const Thresholds<K>& t) {
  return !imin_runs<K>(x, t.zero).empty() && x[0] >= t.three_quarters;
}

template <class K>
bool d2ii(std::span<const K> x, const Thresholds<K>& t) {
  return edge_at_root_is_minimum<K>(x) && t.zero < x[0] && x[0] <= t.half;
}

template <class K>
bool d3(std::span<const K> x, const Thresholds<K>& t) {
  if (!edge_at_root_is_minimum<K>(x)) return false;
  if (!(t.two_thirds <= x[0] && x[0] < t.three_quarters)) return false;
  for (const Run& r : imin_runs<K>(x, t.zero))
    if (r.first >= 1) return true;
  return false;
}

// Locking test on a length-2 path (root edge first).
template <class K>
bool locks(std::span<const K> x, const Thresholds<K>& t) {
  return x.size() == 2 && !imin_runs<K>(x, t.zero).empty() && t.two_thirds < x[0] &&
         x[0] < t.three_quarters;
}

}  // namespace cond
}  // namespace gel
