#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultragrade/index_set.hpp"

namespace ultragrade {

struct VertexRef {
  std::uint32_t family = 0;
  std::uint64_t index = 0;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Subset of G^0: one IndexSet per vertex family, sized to the presentation.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t families) : parts_(families) {}
  static VertexSet single(std::size_t families, VertexRef v);

  std::size_t family_count() const { return parts_.size(); }
  const IndexSet& part(std::uint32_t family) const { return parts_.at(family); }
  IndexSet& part(std::uint32_t family) { return parts_.at(family); }

  bool contains(VertexRef v) const { return v.family < parts_.size() && parts_[v.family].contains(v.index); }
  bool is_empty() const;
  bool is_finite() const;
  bool is_subset_of(const VertexSet& o) const { return (*this - o).is_empty(); }
  bool intersects(const VertexSet& o) const { return !(*this & o).is_empty(); }
  std::optional<VertexRef> min() const;
  /// Members of a finite set in (family, index) order.
  std::vector<VertexRef> elements() const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet& insert(VertexRef v);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<IndexSet> parts_;
};

struct VertexFamily {
  std::string name;
  std::optional<std::uint64_t> cardinality;  // nullopt: countably infinite
  bool atom = false;                         // declared with `vertex <id>`
  friend bool operator==(const VertexFamily&, const VertexFamily&) = default;
};

/// n -> slope*n + offset. slope == 0 denotes a constant.
struct Affine {
  std::uint64_t slope = 0;
  std::int64_t offset = 0;
  std::int64_t at(std::uint64_t n) const { return static_cast<std::int64_t>(slope * n) + offset; }
  friend auto operator<=>(const Affine&, const Affine&) = default;
};

struct VertexTemplate {
  std::uint32_t family = 0;
  Affine index;
  VertexRef at(std::uint64_t n) const { return {family, static_cast<std::uint64_t>(index.at(n))}; }
  friend auto operator<=>(const VertexTemplate&, const VertexTemplate&) = default;
};

struct Edge {
  std::string id;
  VertexRef source;
  VertexSet range;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edges f[n], n >= first, with templated source and finite templated range.
struct EdgeFamily {
  std::string id;
  std::uint64_t first = 0;
  VertexTemplate source;
  std::vector<VertexTemplate> range;
  friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;
};

/// One edge of G^1: an individually specified edge or a member of a family.
struct EdgeInst {
  bool member = false;
  std::uint32_t id = 0;
  std::uint64_t n = 0;
  static EdgeInst single(std::uint32_t id) { return {false, id, 0}; }
  static EdgeInst of_family(std::uint32_t id, std::uint64_t n) { return {true, id, n}; }
  friend auto operator<=>(const EdgeInst&, const EdgeInst&) = default;
};

using EdgePath = std::vector<EdgeInst>;

class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::string name) : name_(std::move(name)) {}

  // Builders. Each validates the new item against what is already present.
  std::uint32_t add_vertex_family(std::string name, std::optional<std::uint64_t> cardinality, bool atom = false);
  std::uint32_t add_vertex(std::string name) { return add_vertex_family(std::move(name), 1, true); }
  std::uint32_t add_edge(std::string id, VertexRef source, VertexSet range);
  std::uint32_t add_edge_family(std::string id, std::uint64_t first, VertexTemplate source,
                                std::vector<VertexTemplate> range);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<VertexFamily>& families() const { return families_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeFamily>& edge_families() const { return edge_families_; }
  std::size_t family_count() const { return families_.size(); }

  std::optional<std::uint32_t> find_family(std::string_view name) const;
  std::optional<std::uint32_t> find_edge(std::string_view id) const;
  std::optional<std::uint32_t> find_edge_family(std::string_view id) const;

  VertexSet empty_set() const { return VertexSet(families_.size()); }
  VertexSet universe() const;
  IndexSet family_universe(std::uint32_t family) const;
  VertexSet complement(const VertexSet& s) const { return universe() - s; }
  VertexSet singleton(VertexRef v) const { return VertexSet::single(families_.size(), v); }
  bool is_valid_vertex(VertexRef v) const;

  bool vertices_finite() const;
  bool edges_finite() const { return edge_families_.empty(); }
  bool is_finite() const { return vertices_finite() && edges_finite(); }
  std::uint64_t vertex_count() const;  // finite G^0 only
  std::vector<VertexRef> vertices() const;  // finite G^0 only
  std::vector<EdgeInst> all_edges() const;  // finite G^1 only

  bool is_valid_edge(EdgeInst e) const;
  VertexRef source(EdgeInst e) const;
  VertexSet range(EdgeInst e) const;
  /// s(b) in r(a)
  bool composable(EdgeInst a, EdgeInst b) const { return range(a).contains(source(b)); }
  /// Finite list of edges emitted by v. Throws InfiniteEmitter when a
  /// constant-source family emits from v.
  std::vector<EdgeInst> out_edges(VertexRef v) const;
  /// Members of edge family `fam` whose range meets `s`.
  IndexSet family_members_hitting(std::uint32_t fam, const VertexSet& s) const;
  /// Sources of all edges whose range meets `s` (may be infinite).
  VertexSet predecessors(const VertexSet& s) const;

  bool is_path(const EdgePath& p) const;

  std::string vertex_label(VertexRef v) const;
  std::string edge_label(EdgeInst e) const;
  std::string path_label(const EdgePath& p) const;
  std::string set_label(const VertexSet& s) const;  // comma-separated items, no braces
  std::string template_label(const VertexTemplate& t) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  void check_new_name(const std::string& name, bool edge_namespace) const;
  void check_vertex(VertexRef v, const char* what) const;

  std::string name_;
  std::vector<VertexFamily> families_;
  std::vector<Edge> edges_;
  std::vector<EdgeFamily> edge_families_;
  std::map<std::string, std::uint32_t, std::less<>> family_index_;
  std::map<std::string, std::uint32_t, std::less<>> edge_index_;
  std::map<std::string, std::uint32_t, std::less<>> edge_family_index_;
};

/// Parse the line-oriented presentation format (see grammar/presentation.ebnf).
Presentation parse_presentation(std::string_view text);
/// Inverse of parse_presentation up to canonical ordering of set literals.
std::string print_presentation(const Presentation& p);

/// Parses a comma-separated set literal (without braces) against `p`.
VertexSet parse_vertex_set(const Presentation& p, std::string_view text);
/// Parses an edge instance `e` or `f[3]`.
EdgeInst parse_edge_inst(const Presentation& p, std::string_view text);

}  // namespace ultragrade
