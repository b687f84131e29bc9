#pragma once

#include <set>
#include <utility>

#include "random_ultragraph.hpp"

namespace ultragrade::test {

/// Vertices lying in the range of some path of length l, given the set for l.
inline std::uint64_t next_reach(const MaskGraph& g, std::uint64_t s) {
  std::uint64_t out = 0;
  for (std::size_t e = 0; e < g.source.size(); ++e)
    if (s >> g.source[e] & 1) out |= g.range[e];
  return out;
}

inline std::uint64_t reach_one(const MaskGraph& g) {
  std::uint64_t out = 0;
  for (auto r : g.range) out |= r;
  return out;
}

/// Condition (Y) with m = 1 by forward subset iteration. B_L is the set of
/// edges that end a prefix of length L + 1 whose every position k is bad,
/// i.e. no path of length k + 1 has the source of the k-th edge in its range.
/// The state (B_L, S_{L+1}) determines the future, so a repeated nonempty
/// state means an infinite bad path exists.
inline bool condition_y_oracle(const MaskGraph& g) {
  std::size_t ne = g.source.size();
  std::uint64_t s = reach_one(g);  // S_1
  std::uint64_t bad = 0;
  for (std::size_t e = 0; e < ne; ++e)
    if (!(s >> g.source[e] & 1)) bad |= std::uint64_t{1} << e;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  while (bad) {
    if (!seen.insert({bad, s}).second) return false;
    std::uint64_t s_next = next_reach(g, s);
    std::uint64_t nb = 0;
    for (std::size_t f = 0; f < ne; ++f) {
      if (s_next >> g.source[f] & 1) continue;
      for (std::size_t e = 0; e < ne; ++e)
        if ((bad >> e & 1) && (g.range[e] >> g.source[f] & 1)) nb |= std::uint64_t{1} << f;
    }
    bad = nb;
    s = s_next;
  }
  return true;
}

/// Checks that the lasso prefix . cycle^omega (edge indices) is a path all of
/// whose positions are bad, scanning well past the joint period.
inline bool is_bad_lasso(const MaskGraph& g, const std::vector<std::size_t>& prefix,
                         const std::vector<std::size_t>& cycle) {
  if (cycle.empty()) return false;
  auto at = [&](std::size_t k) { return k < prefix.size() ? prefix[k] : cycle[(k - prefix.size()) % cycle.size()]; };
  std::size_t horizon = prefix.size() + cycle.size() * (std::size_t{1} << g.n) + (std::size_t{1} << g.n) + 8;
  std::uint64_t s = reach_one(g);
  for (std::size_t k = 0; k < horizon; ++k) {
    if (k > 0 && !(g.range[at(k - 1)] >> g.source[at(k)] & 1)) return false;
    if (s >> g.source[at(k)] & 1) return false;
    s = next_reach(g, s);
  }
  return true;
}

}  // namespace ultragrade::test
