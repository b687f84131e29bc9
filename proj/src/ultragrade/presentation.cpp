#include "ultragrade/presentation.hpp"

#include <sstream>

#include "ultragrade/error.hpp"

namespace ultragrade {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::InfiniteEmitter: return "InfiniteEmitter";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotFiniteEdges: return "NotFiniteEdges";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::PathLengthCap: return "PathLengthCap";
    case ErrorCode::TermCountCap: return "TermCountCap";
    case ErrorCode::MixedPresentation: return "MixedPresentation";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NotStronglyGraded: return "NotStronglyGraded";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::single(std::size_t families, VertexRef v) {
  VertexSet s(families);
  s.insert(v);
  return s;
}

VertexSet& VertexSet::insert(VertexRef v) {
  auto& p = parts_.at(v.family);
  p = p | IndexSet::singleton(v.index);
  return *this;
}

bool VertexSet::is_empty() const {
  for (const auto& p : parts_) {
    if (!p.is_empty()) return false;
  }
  return true;
}

bool VertexSet::is_finite() const {
  for (const auto& p : parts_) {
    if (!p.is_finite()) return false;
  }
  return true;
}

std::optional<VertexRef> VertexSet::min() const {
  for (std::uint32_t f = 0; f < parts_.size(); ++f) {
    if (auto m = parts_[f].min()) return VertexRef{f, *m};
  }
  return std::nullopt;
}

std::vector<VertexRef> VertexSet::elements() const {
  std::vector<VertexRef> out;
  for (std::uint32_t f = 0; f < parts_.size(); ++f) {
    for (auto i : parts_[f].elements()) out.push_back({f, i});
  }
  return out;
}

namespace {

void require_same_shape(const VertexSet& a, const VertexSet& b) {
  if (a.family_count() != b.family_count()) {
    throw Error(ErrorCode::MixedPresentation, "vertex sets from different presentations");
  }
}

}  // namespace

VertexSet VertexSet::operator|(const VertexSet& o) const {
  require_same_shape(*this, o);
  VertexSet r(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) r.parts_[i] = parts_[i] | o.parts_[i];
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  require_same_shape(*this, o);
  VertexSet r(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) r.parts_[i] = parts_[i] & o.parts_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  require_same_shape(*this, o);
  VertexSet r(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) r.parts_[i] = parts_[i] - o.parts_[i];
  return r;
}

// ------------------------------------------------------------- Presentation

void Presentation::check_new_name(const std::string& name, bool edge_namespace) const {
  if (name.empty()) throw Error(ErrorCode::InvalidPresentation, "empty identifier");
  if (edge_namespace) {
    if (edge_index_.count(name) || edge_family_index_.count(name)) {
      throw Error(ErrorCode::InvalidPresentation, "duplicate edge id '" + name + "'");
    }
  } else if (family_index_.count(name)) {
    throw Error(ErrorCode::InvalidPresentation, "duplicate vertex family '" + name + "'");
  }
}

void Presentation::check_vertex(VertexRef v, const char* what) const {
  if (!is_valid_vertex(v)) {
    throw Error(ErrorCode::DanglingReference, std::string(what) + " refers to a vertex outside G^0");
  }
}

std::uint32_t Presentation::add_vertex_family(std::string name, std::optional<std::uint64_t> cardinality, bool atom) {
  check_new_name(name, false);
  if (cardinality && *cardinality == 0) {
    throw Error(ErrorCode::InvalidPresentation, "vertex family '" + name + "' is empty");
  }
  if (!edges_.empty() || !edge_families_.empty()) {
    throw Error(ErrorCode::InvalidPresentation, "vertex families must be declared before edges");
  }
  auto idx = static_cast<std::uint32_t>(families_.size());
  family_index_[name] = idx;
  families_.push_back({std::move(name), cardinality, atom});
  return idx;
}

std::uint32_t Presentation::add_edge(std::string id, VertexRef source, VertexSet range) {
  check_new_name(id, true);
  check_vertex(source, "edge source");
  if (range.family_count() != families_.size()) {
    throw Error(ErrorCode::MixedPresentation, "edge range built for a different presentation");
  }
  if (range.is_empty()) throw Error(ErrorCode::EmptyRange, "edge '" + id + "' has empty range");
  if (!range.is_subset_of(universe())) {
    throw Error(ErrorCode::DanglingReference, "edge '" + id + "' range leaves G^0");
  }
  auto idx = static_cast<std::uint32_t>(edges_.size());
  edge_index_[id] = idx;
  edges_.push_back({std::move(id), source, std::move(range)});
  return idx;
}

std::uint32_t Presentation::add_edge_family(std::string id, std::uint64_t first, VertexTemplate source,
                                            std::vector<VertexTemplate> range) {
  check_new_name(id, true);
  auto check_template = [&](const VertexTemplate& t, const char* what) {
    if (t.family >= families_.size()) throw Error(ErrorCode::DanglingReference, std::string(what) + ": unknown family");
    if (t.index.at(first) < 0) {
      throw Error(ErrorCode::InvalidPresentation, std::string(what) + " has a negative index at n = " + std::to_string(first));
    }
    if (t.index.slope == 0) {
      check_vertex(t.at(first), what);
    } else if (families_[t.family].cardinality) {
      throw Error(ErrorCode::InvalidPresentation,
                  std::string(what) + " maps infinitely many members into finite family '" + families_[t.family].name + "'");
    }
  };
  check_template(source, "edge family source");
  if (range.empty()) throw Error(ErrorCode::EmptyRange, "edge family '" + id + "' has empty range");
  for (const auto& t : range) check_template(t, "edge family range");
  // Distinct terms must denote distinct vertices for every member.
  for (std::size_t i = 0; i < range.size(); ++i) {
    for (std::size_t j = i + 1; j < range.size(); ++j) {
      const auto& x = range[i];
      const auto& y = range[j];
      if (x.family != y.family) continue;
      const std::int64_t ds = static_cast<std::int64_t>(x.index.slope) - static_cast<std::int64_t>(y.index.slope);
      const std::int64_t db = y.index.offset - x.index.offset;
      bool clash = false;
      if (ds == 0) {
        clash = db == 0;
      } else if (db % ds == 0) {
        std::int64_t n = db / ds;
        clash = n >= static_cast<std::int64_t>(first);
      }
      if (clash) {
        throw Error(ErrorCode::InvalidPresentation,
                    "edge family '" + id + "' has range terms that coincide for some member");
      }
    }
  }
  auto idx = static_cast<std::uint32_t>(edge_families_.size());
  edge_family_index_[id] = idx;
  edge_families_.push_back({std::move(id), first, source, std::move(range)});
  return idx;
}

std::optional<std::uint32_t> Presentation::find_family(std::string_view name) const {
  auto it = family_index_.find(name);
  if (it == family_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Presentation::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Presentation::find_edge_family(std::string_view id) const {
  auto it = edge_family_index_.find(id);
  if (it == edge_family_index_.end()) return std::nullopt;
  return it->second;
}

IndexSet Presentation::family_universe(std::uint32_t family) const {
  const auto& f = families_.at(family);
  return f.cardinality ? IndexSet::below(*f.cardinality) : IndexSet::all();
}

VertexSet Presentation::universe() const {
  VertexSet s(families_.size());
  for (std::uint32_t f = 0; f < families_.size(); ++f) s.part(f) = family_universe(f);
  return s;
}

bool Presentation::is_valid_vertex(VertexRef v) const {
  if (v.family >= families_.size()) return false;
  const auto& c = families_[v.family].cardinality;
  return !c || v.index < *c;
}

bool Presentation::vertices_finite() const {
  for (const auto& f : families_) {
    if (!f.cardinality) return false;
  }
  return true;
}

std::uint64_t Presentation::vertex_count() const {
  if (!vertices_finite()) throw Error(ErrorCode::NotFinite, "G^0 is infinite");
  std::uint64_t n = 0;
  for (const auto& f : families_) n += *f.cardinality;
  return n;
}

std::vector<VertexRef> Presentation::vertices() const {
  if (!vertices_finite()) throw Error(ErrorCode::NotFinite, "G^0 is infinite");
  return universe().elements();
}

std::vector<EdgeInst> Presentation::all_edges() const {
  if (!edges_finite()) throw Error(ErrorCode::NotFinite, "G^1 is infinite");
  std::vector<EdgeInst> out;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) out.push_back(EdgeInst::single(i));
  return out;
}

bool Presentation::is_valid_edge(EdgeInst e) const {
  if (!e.member) return e.id < edges_.size() && e.n == 0;
  return e.id < edge_families_.size() && e.n >= edge_families_[e.id].first;
}

VertexRef Presentation::source(EdgeInst e) const {
  if (!is_valid_edge(e)) throw Error(ErrorCode::DanglingReference, "invalid edge instance");
  if (!e.member) return edges_[e.id].source;
  return edge_families_[e.id].source.at(e.n);
}

VertexSet Presentation::range(EdgeInst e) const {
  if (!is_valid_edge(e)) throw Error(ErrorCode::DanglingReference, "invalid edge instance");
  if (!e.member) return edges_[e.id].range;
  VertexSet s(families_.size());
  for (const auto& t : edge_families_[e.id].range) s.insert(t.at(e.n));
  return s;
}

std::vector<EdgeInst> Presentation::out_edges(VertexRef v) const {
  std::vector<EdgeInst> out;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].source == v) out.push_back(EdgeInst::single(i));
  }
  for (std::uint32_t i = 0; i < edge_families_.size(); ++i) {
    const auto& fam = edge_families_[i];
    if (fam.source.family != v.family) continue;
    const auto& a = fam.source.index;
    if (a.slope == 0) {
      if (static_cast<std::int64_t>(v.index) == a.offset) {
        throw Error(ErrorCode::InfiniteEmitter, vertex_label(v) + " is an infinite emitter (family " + fam.id + ")");
      }
      continue;
    }
    std::int64_t d = static_cast<std::int64_t>(v.index) - a.offset;
    if (d < 0 || d % static_cast<std::int64_t>(a.slope) != 0) continue;
    auto n = static_cast<std::uint64_t>(d) / a.slope;
    if (n >= fam.first) out.push_back(EdgeInst::of_family(i, n));
  }
  return out;
}

IndexSet Presentation::family_members_hitting(std::uint32_t fam, const VertexSet& s) const {
  const auto& f = edge_families_.at(fam);
  IndexSet members;
  for (const auto& t : f.range) {
    members = members | s.part(t.family).preimage_affine(t.index.slope, t.index.offset, f.first);
  }
  return members;
}

VertexSet Presentation::predecessors(const VertexSet& s) const {
  VertexSet out(families_.size());
  for (const auto& e : edges_) {
    if (e.range.intersects(s)) out.insert(e.source);
  }
  for (std::uint32_t i = 0; i < edge_families_.size(); ++i) {
    const auto& f = edge_families_[i];
    IndexSet members = family_members_hitting(i, s);
    if (members.is_empty()) continue;
    if (f.source.index.slope == 0) {
      out.insert(f.source.at(f.first));
    } else {
      auto& part = out.part(f.source.family);
      part = part | members.image_affine(f.source.index.slope, f.source.index.offset);
    }
  }
  return out;
}

bool Presentation::is_path(const EdgePath& p) const {
  for (const auto& e : p) {
    if (!is_valid_edge(e)) return false;
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!composable(p[i - 1], p[i])) return false;
  }
  return true;
}

std::string Presentation::vertex_label(VertexRef v) const {
  const auto& f = families_.at(v.family);
  if (f.atom) return f.name;
  return f.name + "[" + std::to_string(v.index) + "]";
}

std::string Presentation::edge_label(EdgeInst e) const {
  if (!e.member) return edges_.at(e.id).id;
  return edge_families_.at(e.id).id + "[" + std::to_string(e.n) + "]";
}

std::string Presentation::path_label(const EdgePath& p) const {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += edge_label(p[i]);
  }
  return out;
}

namespace {

std::string affine_label(const Affine& a) {
  std::string s;
  if (a.slope != 1) s += std::to_string(a.slope) + "*";
  s += "n";
  if (a.offset > 0) s += "+" + std::to_string(a.offset);
  if (a.offset < 0) s += "-" + std::to_string(-a.offset);
  return s;
}

}  // namespace

std::string Presentation::template_label(const VertexTemplate& t) const {
  if (t.index.slope == 0) return vertex_label({t.family, static_cast<std::uint64_t>(t.index.offset)});
  return families_.at(t.family).name + "[" + affine_label(t.index) + "]";
}

std::string Presentation::set_label(const VertexSet& s) const {
  std::vector<std::string> items;
  for (std::uint32_t f = 0; f < families_.size(); ++f) {
    const auto& part = s.part(f);
    if (part.is_empty()) continue;
    const auto& fam = families_[f];
    if (!fam.atom && part == family_universe(f)) {
      items.push_back(fam.name + "[*]");
      continue;
    }
    std::vector<std::uint64_t> points;
    std::vector<IndexSet::Progression> progs;
    part.decompose(points, progs);
    for (auto p : points) items.push_back(vertex_label({f, p}));
    for (const auto& g : progs) {
      Affine a{g.step, static_cast<std::int64_t>(g.start)};
      items.push_back(fam.name + "[" + affine_label(a) + " for n>=0]");
    }
  }
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace ultragrade
