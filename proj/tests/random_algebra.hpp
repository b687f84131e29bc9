#pragma once

#include <random>

#include "ultragrade/algebra.hpp"
#include "ultragrade/paths.hpp"

namespace ultragrade::test {

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random path of length `len` in a finite ultragraph, or nullopt. Length 0
/// yields the empty path.
inline std::optional<EdgePath> random_path(std::mt19937& rng, const Presentation& p, std::size_t len) {
  auto edges = p.all_edges();
  if (len == 0) return EdgePath{};
  if (edges.empty()) return std::nullopt;
  EdgePath path{edges[pick(rng, 0, edges.size() - 1)]};
  while (path.size() < len) {
    std::vector<EdgeInst> next;
    for (auto f : edges)
      if (p.composable(path.back(), f)) next.push_back(f);
    if (next.empty()) return std::nullopt;
    path.push_back(next[pick(rng, 0, next.size() - 1)]);
  }
  return path;
}

inline VertexSet random_subset(std::mt19937& rng, const Presentation& p) {
  auto vs = p.vertices();
  VertexSet s = p.empty_set();
  while (s.is_empty())
    for (auto v : vs)
      if (pick(rng, 0, 1)) s.insert(v);
  return s;
}

inline Coefficient random_coefficient(std::mt19937& rng) {
  std::int64_t num = static_cast<std::int64_t>(pick(rng, 1, 5));
  if (pick(rng, 0, 1)) num = -num;
  return Coefficient(num, static_cast<std::int64_t>(pick(rng, 1, 3)));
}

/// Random nonzero monomial with short paths, with |alpha| - |beta| fixed when
/// `degree` is given. Returns zero when sampling fails.
inline AlgebraElement random_monomial(std::mt19937& rng, const Presentation& p,
                                      std::optional<std::int64_t> degree = std::nullopt, std::size_t max_len = 2) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::size_t la = pick(rng, 0, max_len), lb = pick(rng, 0, max_len);
    if (degree) {
      if (*degree >= 0) {
        la = lb + static_cast<std::size_t>(*degree);
      } else {
        lb = la + static_cast<std::size_t>(-*degree);
      }
      if (la > max_len + 1 || lb > max_len + 1) continue;
    }
    auto a = random_path(rng, p, la), b = random_path(rng, p, lb);
    if (!a || !b) continue;
    VertexSet set = random_subset(rng, p);
    if (!a->empty()) set = set & p.range(a->back());
    if (!b->empty()) set = set & p.range(b->back());
    if (a->empty() && b->empty()) set = random_subset(rng, p);
    if (set.is_empty()) continue;
    auto m = AlgebraElement::monomial(p, random_coefficient(rng), *a, set, *b);
    if (!m.is_zero()) return m;
  }
  return AlgebraElement::zero(p);
}

inline AlgebraElement random_element(std::mt19937& rng, const Presentation& p, std::size_t max_terms = 3,
                                     std::optional<std::int64_t> degree = std::nullopt) {
  AlgebraElement x = AlgebraElement::zero(p);
  std::size_t n = pick(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i) x += random_monomial(rng, p, degree);
  return x;
}

}  // namespace ultragrade::test
