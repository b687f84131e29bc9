#include "ultragrade/partial_action.hpp"

#include <algorithm>
#include <numeric>

#include "ultragrade/error.hpp"
#include "ultragrade/structure.hpp"

namespace ultragrade {

namespace {

std::size_t word_depth(const FreeGroupWord& t) {
  auto shape = t.as_quotient();
  return shape ? shape->a.size() : 0;
}

EdgePath join(const EdgePath& a, EdgePath::const_iterator from, EdgePath::const_iterator to) {
  EdgePath r = a;
  r.insert(r.end(), from, to);
  return r;
}

}  // namespace

PartialAction::PartialAction(const Presentation& p) : p_(p) {
  if (!p.is_finite()) throw Error(ErrorCode::NotFinite, "the path-space model needs a finite ultragraph");
  sinks_ = structural_report(p).sinks;
}

VertexRef PartialAction::source(const PathPoint& x) const {
  switch (x.kind) {
    case PathPoint::Kind::Infinite: return p_.source(x.path.edge_at(0));
    case PathPoint::Kind::SinkPath: return p_.source(x.alpha.front());
    case PathPoint::Kind::SinkVertex: return x.v;
  }
  return x.v;
}

std::optional<EdgeInst> PartialAction::edge_at(const PathPoint& x, std::size_t k) const {
  if (x.kind == PathPoint::Kind::Infinite) return x.path.edge_at(k);
  if (x.kind == PathPoint::Kind::SinkPath && k < x.alpha.size()) return x.alpha[k];
  return std::nullopt;
}

bool PartialAction::is_valid_point(const PathPoint& x) const {
  switch (x.kind) {
    case PathPoint::Kind::Infinite: return is_valid_infinite_path(p_, x.path);
    case PathPoint::Kind::SinkPath:
      return !x.alpha.empty() && p_.is_path(x.alpha) && sinks_.contains(x.v) && p_.range(x.alpha.back()).contains(x.v);
    case PathPoint::Kind::SinkVertex: return sinks_.contains(x.v);
  }
  return false;
}

bool PartialAction::points_equal(const PathPoint& x, const PathPoint& y) const {
  if (x.kind != y.kind) return false;
  if (x.kind != PathPoint::Kind::Infinite) return x.alpha == y.alpha && x.v == y.v;
  // Two lassos agree iff they agree past both prefixes for a common period.
  std::size_t n = std::max(x.path.prefix.size(), y.path.prefix.size());
  std::size_t cx = std::max<std::size_t>(x.path.cycle.size(), 1);
  std::size_t cy = std::max<std::size_t>(y.path.cycle.size(), 1);
  n += std::lcm(cx, cy) + 1;
  return x.path.unroll(n) == y.path.unroll(n);
}

std::string PartialAction::point_label(const PathPoint& x) const {
  switch (x.kind) {
    case PathPoint::Kind::Infinite: return infinite_path_label(p_, x.path);
    case PathPoint::Kind::SinkPath: return "(" + p_.path_label(x.alpha) + ", " + p_.vertex_label(x.v) + ")";
    case PathPoint::Kind::SinkVertex: return "(" + p_.vertex_label(x.v) + ", " + p_.vertex_label(x.v) + ")";
  }
  return {};
}

bool PartialAction::point_in_set(const PathPoint& x, const FreeGroupWord& t) const {
  if (t.is_identity()) return true;
  auto shape = t.as_quotient();
  if (!shape) return false;
  const auto& [a, b] = *shape;
  auto prefix_is = [&](const EdgePath& w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (edge_at(x, k) != w[k]) return false;
    }
    return true;
  };
  if (b.empty()) return prefix_is(a);
  if (!p_.is_path(b)) return false;
  if (a.empty()) return p_.range(b.back()).contains(source(x));
  if (!p_.is_path(a)) return false;
  VertexSet meet = p_.range(a.back()) & p_.range(b.back());
  if (meet.is_empty()) return false;
  if (x.kind == PathPoint::Kind::SinkPath && x.alpha == a) return meet.contains(x.v);
  auto next = edge_at(x, a.size());
  return next && prefix_is(a) && meet.contains(p_.source(*next));
}

bool PartialAction::point_in_generalized_vertex(const PathPoint& x, const VertexSet& a) const {
  return a.contains(source(x));
}

bool PartialAction::point_in_path_set(const PathPoint& x, const EdgePath& b, const VertexSet& a) const {
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (edge_at(x, k) != b[k]) return false;
  }
  if (x.kind == PathPoint::Kind::SinkPath && x.alpha == b) return a.contains(x.v);
  auto next = edge_at(x, b.size());
  return next && a.contains(p_.source(*next));
}

PathPoint PartialAction::reference_theta(const FreeGroupWord& t, const PathPoint& x) const {
  if (t.is_identity()) return x;
  if (!point_in_set(x, t.inverse())) {
    throw Error(ErrorCode::NotInDomain, point_label(x) + " is outside the domain of theta_{" + t.to_string(p_) + "}");
  }
  auto [a, b] = *t.as_quotient();
  switch (x.kind) {
    case PathPoint::Kind::Infinite: return PathPoint::infinite(prepend(a, shift_path(x.path, b.size())));
    case PathPoint::Kind::SinkPath: {
      EdgePath rest = join(a, x.alpha.begin() + static_cast<std::ptrdiff_t>(b.size()), x.alpha.end());
      return rest.empty() ? PathPoint::sink_vertex(x.v) : PathPoint::sink_path(std::move(rest), x.v);
    }
    case PathPoint::Kind::SinkVertex: return a.empty() ? x : PathPoint::sink_path(a, x.v);
  }
  return x;
}

PathPoint PartialAction::theta(const FreeGroupWord& t, const PathPoint& x) const {
  if (!override_) return reference_theta(t, x);
  if (!t.is_identity() && !point_in_set(x, t.inverse())) {
    throw Error(ErrorCode::NotInDomain, point_label(x) + " is outside the domain of theta_{" + t.to_string(p_) + "}");
  }
  return override_(t, x);
}

std::vector<Atom> PartialAction::atoms(std::size_t depth) const {
  std::vector<Atom> out;
  auto sink_list = sinks_.elements();
  for (const auto& v : sink_list) out.push_back({{}, v, true});
  for (std::size_t len = 1; len <= depth; ++len) {
    for (const auto& a : paths_of_length(p_, len)) {
      for (const auto& v : (p_.range(a.back()) & sinks_).elements()) out.push_back({a, v, true});
    }
  }
  if (depth == 0) {
    for (const auto& u : p_.vertices()) {
      if (!sinks_.contains(u)) out.push_back({{}, u, false});
    }
  } else {
    for (const auto& w : paths_of_length(p_, depth)) {
      for (const auto& u : (p_.range(w.back()) - sinks_).elements()) out.push_back({w, u, false});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Atom PartialAction::signature(const PathPoint& x, std::size_t depth) const {
  if (x.is_finite() && x.length() <= depth) return {x.alpha, x.v, true};
  Atom a;
  for (std::size_t k = 0; k < depth; ++k) a.w.push_back(*edge_at(x, k));
  a.v = p_.source(*edge_at(x, depth));
  return a;
}

PathPoint PartialAction::extend_from(const EdgePath& w, VertexRef u) const {
  // Greedy walk from u: stop at the first range holding a sink, or close a
  // cycle when a vertex repeats.
  EdgePath walk;
  std::vector<VertexRef> visited{u};
  VertexRef cur = u;
  for (;;) {
    EdgeInst e = p_.out_edges(cur).front();
    VertexSet r = p_.range(e);
    if (auto s = (r & sinks_).min()) {
      walk.push_back(e);
      return PathPoint::sink_path(join(w, walk.begin(), walk.end()), *s);
    }
    VertexRef next = *r.min();
    walk.push_back(e);
    auto it = std::find(visited.begin(), visited.end(), next);
    if (it != visited.end()) {
      auto i = it - visited.begin();
      EdgePath prefix = join(w, walk.begin(), walk.begin() + i);
      EdgePath cycle(walk.begin() + i, walk.end());
      return PathPoint::infinite(InfinitePath::lasso(std::move(prefix), std::move(cycle)));
    }
    visited.push_back(next);
    cur = next;
  }
}

PathPoint PartialAction::representative(const Atom& a) const {
  if (a.terminal) return a.w.empty() ? PathPoint::sink_vertex(a.v) : PathPoint::sink_path(a.w, a.v);
  return extend_from(a.w, a.v);
}

namespace {

template <class Pred>
DElement tabulate(const PartialAction& pa, std::size_t depth, Pred pred) {
  DElement f;
  f.depth = depth;
  for (const auto& a : pa.atoms(depth)) {
    if (pred(pa.representative(a))) f.values.emplace(a, 1);
  }
  return f;
}

}  // namespace

DElement PartialAction::indicator_vertex_set(const VertexSet& a) const {
  return tabulate(*this, 0, [&](const PathPoint& x) { return point_in_generalized_vertex(x, a); });
}

DElement PartialAction::indicator_word(const FreeGroupWord& t) const {
  return tabulate(*this, word_depth(t), [&](const PathPoint& x) { return point_in_set(x, t); });
}

DElement PartialAction::indicator_path_set(const EdgePath& b, const VertexSet& a) const {
  return tabulate(*this, b.size(), [&](const PathPoint& x) { return point_in_path_set(x, b, a); });
}

DElement PartialAction::refine(const DElement& f, std::size_t depth) const {
  if (depth <= f.depth) return f;
  DElement g;
  g.depth = depth;
  for (const auto& a : atoms(depth)) {
    auto it = f.values.find(signature(representative(a), f.depth));
    if (it != f.values.end()) g.values.emplace(a, it->second);
  }
  return g;
}

DElement PartialAction::compact(const DElement& f) const {
  for (std::size_t d = 0; d < f.depth; ++d) {
    DElement g;
    g.depth = d;
    for (const auto& a : atoms(d)) {
      Coefficient c = evaluate(f, representative(a));
      if (c != 0) g.values.emplace(a, std::move(c));
    }
    if (refine(g, f.depth).values == f.values) return g;
  }
  return f;
}

Coefficient PartialAction::evaluate(const DElement& f, const PathPoint& x) const {
  auto it = f.values.find(signature(x, f.depth));
  return it == f.values.end() ? Coefficient(0) : it->second;
}

DElement PartialAction::add(const DElement& f, const DElement& g) const {
  std::size_t d = std::max(f.depth, g.depth);
  DElement r = refine(f, d);
  for (const auto& [a, c] : refine(g, d).values) {
    auto& slot = r.values[a];
    slot += c;
    if (slot == 0) r.values.erase(a);
  }
  return r;
}

DElement PartialAction::multiply(const DElement& f, const DElement& g) const {
  std::size_t d = std::max(f.depth, g.depth);
  DElement x = refine(f, d);
  DElement y = refine(g, d);
  DElement r;
  r.depth = d;
  for (const auto& [a, c] : x.values) {
    auto it = y.values.find(a);
    if (it != y.values.end()) r.values.emplace(a, c * it->second);
  }
  return r;
}

DElement PartialAction::scale(const DElement& f, const Coefficient& c) const {
  DElement r;
  r.depth = f.depth;
  if (c == 0) return r;
  for (const auto& [a, v] : f.values) r.values.emplace(a, v * c);
  return r;
}

bool PartialAction::equal(const DElement& f, const DElement& g) const {
  std::size_t d = std::max(f.depth, g.depth);
  return refine(f, d).values == refine(g, d).values;
}

bool PartialAction::in_ideal(const DElement& f, const FreeGroupWord& t) const {
  DElement g = refine(f, std::max(f.depth, word_depth(t)));
  for (const auto& [a, c] : g.values) {
    if (!point_in_set(representative(a), t)) return false;
  }
  return true;
}

DElement PartialAction::beta(const FreeGroupWord& t, const DElement& f) const {
  if (t.is_identity()) return f;
  FreeGroupWord inv = t.inverse();
  if (!in_ideal(f, inv)) throw Error(ErrorCode::NotInIdeal, "function is not supported in X_{" + inv.to_string(p_) + "}");
  DElement r;
  auto shape = t.as_quotient();
  if (!shape) {
    r.depth = f.depth;
    return r;
  }
  r.depth = f.depth + shape->a.size() + shape->b.size();
  for (const auto& a : atoms(r.depth)) {
    PathPoint y = representative(a);
    if (!point_in_set(y, t)) continue;
    Coefficient c = evaluate(f, theta(inv, y));
    if (c != 0) r.values.emplace(a, std::move(c));
  }
  return compact(r);
}

SkewElement PartialAction::skew_term(const DElement& f, const FreeGroupWord& t) const {
  SkewElement u;
  if (is_zero(f)) return u;
  if (!in_ideal(f, t)) throw Error(ErrorCode::NotInIdeal, "coefficient is not in D_{" + t.to_string(p_) + "}");
  u.components.emplace(t, f);
  return u;
}

SkewElement PartialAction::skew_add(const SkewElement& u, const SkewElement& v) const {
  SkewElement r = u;
  for (const auto& [t, f] : v.components) {
    auto it = r.components.find(t);
    if (it == r.components.end()) {
      r.components.emplace(t, f);
      continue;
    }
    it->second = add(it->second, f);
    if (is_zero(it->second)) r.components.erase(it);
  }
  return r;
}

SkewElement PartialAction::skew_scale(const SkewElement& u, const Coefficient& c) const {
  SkewElement r;
  if (c == 0) return r;
  for (const auto& [t, f] : u.components) r.components.emplace(t, scale(f, c));
  return r;
}

SkewElement PartialAction::skew_multiply(const SkewElement& u, const SkewElement& v) const {
  SkewElement r;
  for (const auto& [g, f] : u.components) {
    DElement pulled = beta(g.inverse(), f);
    for (const auto& [t, h] : v.components) {
      DElement z = beta(g, multiply(pulled, h));
      if (is_zero(z)) continue;
      FreeGroupWord gt = g * t;
      if (!in_ideal(z, gt)) {
        throw Error(ErrorCode::NotInIdeal, "product component escapes D_{" + gt.to_string(p_) + "}");
      }
      SkewElement term;
      term.components.emplace(gt, std::move(z));
      r = skew_add(r, term);
    }
  }
  return r;
}

bool PartialAction::skew_equal(const SkewElement& u, const SkewElement& v) const {
  for (const auto& [t, f] : u.components) {
    auto it = v.components.find(t);
    if (it == v.components.end() ? !is_zero(f) : !equal(f, it->second)) return false;
  }
  for (const auto& [t, f] : v.components) {
    if (!u.components.contains(t) && !is_zero(f)) return false;
  }
  return true;
}

std::string PartialAction::d_to_string(const DElement& f) const {
  if (f.values.empty()) return "0";
  std::string out;
  for (const auto& [a, c] : f.values) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.str() + "*";
    if (a.terminal) {
      out += "1[(" + (a.w.empty() ? p_.vertex_label(a.v) : p_.path_label(a.w)) + ", " + p_.vertex_label(a.v) + ")]";
    } else {
      // Paths beginning with w and continuing past v.
      out += "1[" + (a.w.empty() ? std::string() : p_.path_label(a.w) + " ") + p_.vertex_label(a.v) + "...]";
    }
  }
  return out;
}

std::string PartialAction::skew_to_string(const SkewElement& u) const {
  if (u.components.empty()) return "0";
  std::string out;
  for (const auto& [t, f] : u.components) {
    if (!out.empty()) out += "\n";
    out += "delta[" + t.to_string(p_) + "]: " + d_to_string(f);
  }
  return out;
}

SkewElement PartialAction::phi_projection(const VertexSet& a) const {
  return skew_term(indicator_vertex_set(a), FreeGroupWord{});
}

SkewElement PartialAction::phi_s(EdgeInst e) const {
  auto t = FreeGroupWord::of_path({e});
  return skew_term(indicator_word(t), t);
}

SkewElement PartialAction::phi_s_star(EdgeInst e) const {
  auto t = FreeGroupWord::of_path({e}).inverse();
  return skew_term(indicator_word(t), t);
}

SkewElement PartialAction::phi(const AlgebraElement& x) const {
  SkewElement r;
  for (const auto& [k, c] : x.terms()) {
    SkewElement m = phi_projection(k.set);
    for (auto it = k.alpha.rbegin(); it != k.alpha.rend(); ++it) m = skew_multiply(phi_s(*it), m);
    for (auto it = k.beta.rbegin(); it != k.beta.rend(); ++it) m = skew_multiply(m, phi_s_star(*it));
    r = skew_add(r, skew_scale(m, c));
  }
  return r;
}

namespace {

struct Tally {
  RelationCheck check;
  std::size_t cases = 0;
  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && check.pass) {
      check.pass = false;
      check.detail = "fails for " + what;
    }
  }
  RelationCheck done() {
    if (check.pass) check.detail = std::to_string(cases) + " cases";
    return check;
  }
};

}  // namespace

std::vector<RelationCheck> PartialAction::verify_generator_relations(std::size_t depth) const {
  auto same = [&](const SkewElement& u, const SkewElement& v) {
    SkewElement a = u;
    SkewElement b = v;
    for (auto& [t, f] : a.components) f = refine(f, depth);
    for (auto& [t, f] : b.components) f = refine(f, depth);
    return skew_equal(a, b);
  };
  auto label = [&](const VertexSet& s) { return "{" + p_.set_label(s) + "}"; };
  auto edges = p_.all_edges();

  std::vector<VertexSet> sample;
  for (const auto& v : p_.vertices()) sample.push_back(p_.singleton(v));
  for (const auto& e : edges) sample.push_back(p_.range(e));

  Tally proj{{"projections", true, {}}};
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      auto pa = phi_projection(a);
      auto pb = phi_projection(b);
      auto meet = phi_projection(a & b);
      proj.record(same(skew_multiply(pa, pb), meet), label(a) + " and " + label(b) + " (product)");
      proj.record(same(phi_projection(a | b), skew_add(skew_add(pa, pb), skew_scale(meet, -1))),
                  label(a) + " and " + label(b) + " (union)");
    }
  }

  Tally iso{{"partial-isometries", true, {}}};
  Tally orth{{"orthogonality", true, {}}};
  for (const auto& e : edges) {
    auto se = phi_s(e);
    iso.record(same(skew_multiply(se, phi_projection(p_.range(e))), se), "s_" + p_.edge_label(e) + " p_r");
    iso.record(same(skew_multiply(phi_projection(p_.singleton(p_.source(e))), se), se), "p_s s_" + p_.edge_label(e));
    for (const auto& f : edges) {
      auto lhs = skew_multiply(phi_s_star(e), phi_s(f));
      auto rhs = e == f ? phi_projection(p_.range(e)) : SkewElement{};
      orth.record(same(lhs, rhs), "s_" + p_.edge_label(e) + "^* s_" + p_.edge_label(f));
    }
  }

  Tally ck{{"cuntz-krieger", true, {}}};
  for (const auto& v : p_.vertices()) {
    auto out = p_.out_edges(v);
    if (out.empty()) continue;
    SkewElement sum;
    for (const auto& e : out) sum = skew_add(sum, skew_multiply(phi_s(e), phi_s_star(e)));
    ck.record(same(phi_projection(p_.singleton(v)), sum), "p_" + p_.vertex_label(v));
  }
  return {proj.done(), iso.done(), orth.done(), ck.done()};
}

}  // namespace ultragrade
