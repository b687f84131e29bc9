#include "ultragrade/lattice.hpp"

#include <algorithm>
#include <set>

#include "ultragrade/error.hpp"

namespace ultragrade {

namespace {

struct Candidate {
  std::vector<std::uint32_t> edges;
  VertexSet set;
};

void enumerate_intersections(const Presentation& p, const VertexSet& target, std::vector<std::uint32_t>& chosen,
                             const VertexSet& current, std::uint32_t next, std::size_t& visited,
                             std::vector<Candidate>& out) {
  const auto& edges = p.edges();
  for (std::uint32_t i = next; i < edges.size(); ++i) {
    if (++visited > kMaxIntersectionSubsets) {
      throw Error(ErrorCode::LimitExceeded, "more than 2^20 range intersections");
    }
    VertexSet inter = chosen.empty() ? edges[i].range : (current & edges[i].range);
    if (inter.is_empty()) continue;
    chosen.push_back(i);
    if (inter.is_subset_of(target)) out.push_back({chosen, inter});
    enumerate_intersections(p, target, chosen, inter, i + 1, visited, out);
    chosen.pop_back();
  }
}

}  // namespace

G0Membership g0_contains(const Presentation& p, const VertexSet& a) {
  if (a.is_empty()) return {};
  std::vector<Candidate> candidates;
  std::vector<std::uint32_t> chosen;
  std::size_t visited = 0;
  enumerate_intersections(p, a, chosen, p.empty_set(), 0, visited, candidates);
  // Wider intersections (fewer edges) first keeps the witness short.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.edges.size() < y.edges.size(); });
  GeneralizedVertexWitness w;
  VertexSet covered = p.empty_set();
  for (const auto& c : candidates) {
    if (c.set.is_subset_of(covered)) continue;
    covered = covered | c.set;
    w.intersections.push_back(c.edges);
  }
  VertexSet rest = a - covered;
  if (!rest.is_finite()) return {};
  w.finite_part = rest.elements();
  return {true, std::move(w)};
}

VertexSet evaluate_witness(const Presentation& p, const GeneralizedVertexWitness& w) {
  VertexSet s = p.empty_set();
  for (const auto& t : w.intersections) {
    if (t.empty()) continue;
    VertexSet inter = p.edges().at(t.front()).range;
    for (std::size_t i = 1; i < t.size(); ++i) inter = inter & p.edges().at(t[i]).range;
    s = s | inter;
  }
  for (auto v : w.finite_part) s.insert(v);
  return s;
}

std::vector<std::uint64_t> g0_closure_finite(const Presentation& p) {
  if (!p.vertices_finite()) throw Error(ErrorCode::NotFinite, "closure needs finite G^0");
  auto verts = p.vertices();
  if (verts.size() > 64) throw Error(ErrorCode::LimitExceeded, "closure limited to 64 vertices");
  auto mask_of = [&](const VertexSet& s) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (s.contains(verts[i])) m |= std::uint64_t{1} << i;
    }
    return m;
  };
  std::set<std::uint64_t> family;
  for (std::size_t i = 0; i < verts.size(); ++i) family.insert(std::uint64_t{1} << i);
  for (const auto& e : p.edges()) family.insert(mask_of(e.range));
  for (std::uint32_t f = 0; f < p.edge_families().size(); ++f) {
    // Finite G^0 forces constant templates, so every member has one range.
    family.insert(mask_of(p.range(EdgeInst::of_family(f, p.edge_families()[f].first))));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::uint64_t u = cur[i] | cur[j];
        std::uint64_t n = cur[i] & cur[j];
        if (family.insert(u).second) grew = true;
        if (n != 0 && family.insert(n).second) grew = true;
      }
    }
  }
  return {family.begin(), family.end()};
}

bool is_unital(const Presentation& p) { return g0_contains(p, p.universe()).member; }

}  // namespace ultragrade
