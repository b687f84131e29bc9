#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultragrade/algebra.hpp"
#include "ultragrade/free_group.hpp"
#include "ultragrade/paths.hpp"

namespace ultragrade {

/// Point of the path space X: an infinite path, a pair (alpha, v) with
/// |alpha| >= 1 and v a sink in r(alpha), or (v, v) for a sink v.
struct PathPoint {
  enum class Kind { Infinite, SinkPath, SinkVertex };
  Kind kind = Kind::SinkVertex;
  InfinitePath path;  // Infinite
  EdgePath alpha;     // SinkPath
  VertexRef v;        // SinkPath, SinkVertex

  static PathPoint infinite(InfinitePath x) { return {Kind::Infinite, std::move(x), {}, {}}; }
  static PathPoint sink_path(EdgePath a, VertexRef v) { return {Kind::SinkPath, {}, std::move(a), v}; }
  static PathPoint sink_vertex(VertexRef v) { return {Kind::SinkVertex, {}, {}, v}; }

  bool is_finite() const { return kind != Kind::Infinite; }
  /// Length of a finite point.
  std::size_t length() const { return kind == Kind::SinkPath ? alpha.size() : 0; }
};

/// Cell of the depth-m partition of X. A long atom (terminal == false)
/// collects points with more than m edges whose first m edges are `w` and
/// whose (m+1)-th edge leaves `v`. A terminal atom is the single point
/// (w, v), or (v, v) when w is empty.
struct Atom {
  EdgePath w;
  VertexRef v;
  bool terminal = false;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Locally constant function on X, stored as its values on the atoms of a
/// fixed depth. Atoms absent from the map carry 0.
struct DElement {
  std::size_t depth = 0;
  std::map<Atom, Coefficient> values;
};

/// Finite formal sum of f_t delta_t with f_t in D_t.
struct SkewElement {
  std::map<FreeGroupWord, DElement> components;
};

struct RelationCheck {
  std::string relation;
  bool pass = false;
  std::string detail;
};

/// Partial action of the free group on the edges on X, the induced action on
/// D and the partial skew group ring. Finite ultragraphs only.
class PartialAction {
 public:
  using ThetaFn = std::function<PathPoint(const FreeGroupWord&, const PathPoint&)>;

  explicit PartialAction(const Presentation& p);
  /// Holds a reference to `p`.
  explicit PartialAction(Presentation&&) = delete;

  const Presentation& presentation() const { return p_; }

  /// Replaces theta on the points where it is defined. For mutation tests.
  void set_theta_override(ThetaFn fn) { override_ = std::move(fn); }

  // Points.
  VertexRef source(const PathPoint& x) const;
  std::optional<EdgeInst> edge_at(const PathPoint& x, std::size_t k) const;
  bool is_valid_point(const PathPoint& x) const;
  bool points_equal(const PathPoint& x, const PathPoint& y) const;
  std::string point_label(const PathPoint& x) const;

  bool point_in_set(const PathPoint& x, const FreeGroupWord& t) const;
  bool point_in_generalized_vertex(const PathPoint& x, const VertexSet& a) const;
  bool point_in_path_set(const PathPoint& x, const EdgePath& b, const VertexSet& a) const;
  /// theta_t : X_{t^-1} -> X_t. Throws NotInDomain.
  PathPoint theta(const FreeGroupWord& t, const PathPoint& x) const;
  PathPoint reference_theta(const FreeGroupWord& t, const PathPoint& x) const;

  // Atoms.
  std::vector<Atom> atoms(std::size_t depth) const;
  Atom signature(const PathPoint& x, std::size_t depth) const;
  PathPoint representative(const Atom& a) const;

  // D.
  DElement indicator_vertex_set(const VertexSet& a) const;
  DElement indicator_word(const FreeGroupWord& t) const;
  DElement indicator_path_set(const EdgePath& b, const VertexSet& a) const;
  DElement refine(const DElement& f, std::size_t depth) const;
  /// Same function at the smallest depth that still determines it.
  DElement compact(const DElement& f) const;
  Coefficient evaluate(const DElement& f, const PathPoint& x) const;
  DElement add(const DElement& f, const DElement& g) const;
  DElement multiply(const DElement& f, const DElement& g) const;
  DElement scale(const DElement& f, const Coefficient& c) const;
  bool equal(const DElement& f, const DElement& g) const;
  bool is_zero(const DElement& f) const { return f.values.empty(); }
  /// Support inside X_t.
  bool in_ideal(const DElement& f, const FreeGroupWord& t) const;
  /// beta_t(f) = f o theta_{t^-1}, f in D_{t^-1}. Throws NotInIdeal.
  DElement beta(const FreeGroupWord& t, const DElement& f) const;

  // Skew group ring.
  SkewElement skew_term(const DElement& f, const FreeGroupWord& t) const;
  SkewElement skew_add(const SkewElement& u, const SkewElement& v) const;
  SkewElement skew_scale(const SkewElement& u, const Coefficient& c) const;
  SkewElement skew_multiply(const SkewElement& u, const SkewElement& v) const;
  bool skew_equal(const SkewElement& u, const SkewElement& v) const;
  std::string skew_to_string(const SkewElement& u) const;
  std::string d_to_string(const DElement& f) const;

  SkewElement phi_projection(const VertexSet& a) const;
  SkewElement phi_s(EdgeInst e) const;
  SkewElement phi_s_star(EdgeInst e) const;
  SkewElement phi(const AlgebraElement& x) const;

  /// Checks the defining relations on the images of the generators, comparing
  /// functions on the atoms of depth at least `depth`.
  std::vector<RelationCheck> verify_generator_relations(std::size_t depth) const;

 private:
  PathPoint extend_from(const EdgePath& w, VertexRef u) const;

  const Presentation& p_;
  VertexSet sinks_;
  ThetaFn override_;
};

}  // namespace ultragrade
