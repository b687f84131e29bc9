#pragma once

#include <random>
#include <string>

#include "ultragrade/presentation.hpp"

namespace ultragrade::test {

struct RandomShape {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 8;
  bool no_sinks = false;  // every vertex emits an edge
};

/// Finite ultragraph with atom vertices v0.. and edges e0.., each range a
/// random nonempty subset.
inline Presentation random_ultragraph(std::mt19937& rng, const RandomShape& shape, const std::string& name = "rnd") {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::size_t nv = pick(1, shape.no_sinks ? std::min(shape.max_vertices, shape.max_edges) : shape.max_vertices);
  std::size_t ne = pick(shape.no_sinks ? nv : 0, shape.max_edges);
  Presentation p(name);
  for (std::size_t i = 0; i < nv; ++i) p.add_vertex("v" + std::to_string(i));
  for (std::size_t j = 0; j < ne; ++j) {
    std::size_t src = (shape.no_sinks && j < nv) ? j : pick(0, nv - 1);
    VertexSet range = p.empty_set();
    while (range.is_empty()) {
      for (std::size_t i = 0; i < nv; ++i)
        if (pick(0, 2) == 0) range.insert({static_cast<std::uint32_t>(i), 0});
    }
    p.add_edge("e" + std::to_string(j), {static_cast<std::uint32_t>(src), 0}, range);
  }
  return p;
}

/// Finite ultragraph with bitmask ranges, for oracles that work on masks.
struct MaskGraph {
  std::size_t n = 0;
  std::vector<std::size_t> source;
  std::vector<std::uint64_t> range;
};

inline MaskGraph to_masks(const Presentation& p) {
  MaskGraph g;
  auto vs = p.vertices();
  g.n = vs.size();
  for (auto e : p.all_edges()) {
    std::size_t s = 0;
    while (vs[s] != p.source(e)) ++s;
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (p.range(e).contains(vs[i])) m |= std::uint64_t{1} << i;
    g.source.push_back(s);
    g.range.push_back(m);
  }
  return g;
}

}  // namespace ultragrade::test
