#include "ultragrade/structure.hpp"

namespace ultragrade {

VertexSet emitting_vertices(const Presentation& p) {
  VertexSet s = p.empty_set();
  for (const auto& e : p.edges()) s.insert(e.source);
  for (const auto& f : p.edge_families()) {
    if (f.source.index.slope == 0) {
      s.insert(f.source.at(f.first));
    } else {
      auto& part = s.part(f.source.family);
      part = part | IndexSet::progression(f.source.index.slope, static_cast<std::uint64_t>(f.source.index.at(f.first)));
    }
  }
  return s;
}

VertexSet covered_vertices(const Presentation& p) {
  VertexSet s = p.empty_set();
  for (const auto& e : p.edges()) s = s | e.range;
  for (const auto& f : p.edge_families()) {
    for (const auto& t : f.range) {
      if (t.index.slope == 0) {
        s.insert(t.at(f.first));
      } else {
        auto& part = s.part(t.family);
        part = part | IndexSet::progression(t.index.slope, static_cast<std::uint64_t>(t.index.at(f.first)));
      }
    }
  }
  return s;
}

StructuralReport structural_report(const Presentation& p) {
  StructuralReport r;
  r.sinks = p.universe() - emitting_vertices(p);
  r.sources = p.universe() - covered_vertices(p);
  r.has_sinks = !r.sinks.is_empty();
  r.sink_witness = r.sinks.min();
  r.has_sources = !r.sources.is_empty();
  r.source_witness = r.sources.min();
  for (const auto& f : p.edge_families()) {
    if (f.source.index.slope == 0) {
      r.has_infinite_emitter = true;
      r.infinite_emitter_witness = f.source.at(f.first);
      break;
    }
  }
  r.finite_range = true;
  for (const auto& e : p.edges()) {
    if (!e.range.is_finite()) r.finite_range = false;
  }
  r.row_finite = r.finite_range && !r.has_infinite_emitter;
  return r;
}

namespace {

std::string vertex_token(const Presentation& p, VertexRef v) {
  const auto& f = p.families()[v.family];
  if (f.atom) return f.name;
  return f.name + "." + std::to_string(v.index);
}

}  // namespace

Presentation build_associated_graph(const Presentation& p) {
  Presentation g(p.name() + "_E");
  for (const auto& f : p.families()) g.add_vertex_family(f.name, f.cardinality, f.atom);
  std::vector<std::pair<std::string, std::pair<VertexTemplate, VertexTemplate>>> families;
  for (const auto& e : p.edges()) {
    for (std::uint32_t fam = 0; fam < p.family_count(); ++fam) {
      std::vector<std::uint64_t> points;
      std::vector<IndexSet::Progression> progs;
      e.range.part(fam).decompose(points, progs);
      for (auto idx : points) {
        VertexRef u{fam, idx};
        g.add_edge(e.id + "@" + vertex_token(p, u), e.source, g.singleton(u));
      }
      for (const auto& pr : progs) {
        std::string id = e.id + "@" + p.families()[fam].name + ".p" + std::to_string(pr.step) + "_" +
                         std::to_string(pr.start);
        VertexTemplate src{e.source.family, {0, static_cast<std::int64_t>(e.source.index)}};
        VertexTemplate rng{fam, {pr.step, static_cast<std::int64_t>(pr.start)}};
        families.push_back({id, {src, rng}});
      }
    }
  }
  for (const auto& [id, tpl] : families) g.add_edge_family(id, 0, tpl.first, {tpl.second});
  for (const auto& f : p.edge_families()) {
    for (std::size_t j = 0; j < f.range.size(); ++j) {
      g.add_edge_family(f.id + "@t" + std::to_string(j), f.first, f.source, {f.range[j]});
    }
  }
  return g;
}

bool is_graph_shaped(const Presentation& p) {
  for (const auto& e : p.edges()) {
    if (!e.range.is_finite() || e.range.elements().size() != 1) return false;
  }
  for (const auto& f : p.edge_families()) {
    if (f.range.size() != 1) return false;
  }
  return true;
}

}  // namespace ultragrade
