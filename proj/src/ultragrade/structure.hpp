#pragma once

#include <optional>

#include "ultragrade/presentation.hpp"

namespace ultragrade {

struct StructuralReport {
  bool has_sinks = false;
  std::optional<VertexRef> sink_witness;
  bool has_sources = false;
  std::optional<VertexRef> source_witness;
  bool has_infinite_emitter = false;
  std::optional<VertexRef> infinite_emitter_witness;
  bool row_finite = false;
  bool finite_range = false;
  VertexSet sinks;    // vertices emitting no edge
  VertexSet sources;  // vertices in no range
};

/// Vertices that emit at least one edge.
VertexSet emitting_vertices(const Presentation& p);
/// Union of all ranges.
VertexSet covered_vertices(const Presentation& p);

StructuralReport structural_report(const Presentation& p);

/// Directed graph E_G: same vertices; an edge e@u from s(e) to {u} for every
/// u in r(e). Individual edges split into `e@<u>` edges (a vertex v[3] is
/// written `v.3`) and, for infinite parts of r(e), into edge families
/// `e@<v>.p<step>_<start>` over the progressions of r(e). A family f splits
/// into one family `f@t<j>` per range term.
Presentation build_associated_graph(const Presentation& p);

/// Every range is a singleton.
bool is_graph_shaped(const Presentation& p);

}  // namespace ultragrade
