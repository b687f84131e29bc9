#include "ultragrade/certificates.hpp"

#include <deque>
#include <map>
#include <set>

#include "ultragrade/condition_y.hpp"
#include "ultragrade/error.hpp"
#include "ultragrade/lattice.hpp"
#include "ultragrade/structure.hpp"

namespace ultragrade {

PositionAutomaton::PositionAutomaton(const Presentation& p) : p_(p) {
  if (!p.edges_finite()) throw Error(ErrorCode::NotFiniteEdges, "needs finitely many edges");
  edges_ = p.all_edges();
  const std::size_t n = edges_.size();
  succ_.assign(n, std::vector<bool>(n));
  meets_.assign(n, std::vector<bool>(n));
  std::vector<VertexSet> ranges;
  for (const auto& e : edges_) ranges.push_back(p.range(e));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      succ_[i][j] = ranges[i].contains(p.source(edges_[j]));
      meets_[i][j] = ranges[i].intersects(ranges[j]);
    }
  }
  std::map<std::vector<bool>, std::uint64_t> seen;
  std::vector<bool> cur(n, true);
  for (;;) {
    pos_.push_back(cur);
    seen.emplace(cur, pos_.size());
    std::vector<bool> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!cur[i]) continue;
      for (std::size_t j = 0; j < n; ++j) next[j] = next[j] || succ_[i][j];
    }
    if (auto it = seen.find(next); it != seen.end()) {
      start_ = it->second;
      period_ = pos_.size() + 1 - start_;
      break;
    }
    cur = std::move(next);
  }
}

std::uint64_t PositionAutomaton::canonical(std::uint64_t j) const {
  if (j < start_ + period_) return j;
  return start_ + (j - start_) % period_;
}

std::vector<bool> PositionAutomaton::position(std::uint64_t j) const {
  if (j == 0) throw Error(ErrorCode::InvalidArgument, "positions are 1-based");
  return pos_[canonical(j) - 1];
}

VertexSet PositionAutomaton::ranges_at(std::uint64_t m) const {
  VertexSet r = p_.empty_set();
  auto pos = position(m);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (pos[i]) r = r | p_.range(edges_[i]);
  }
  return r;
}

std::vector<bool> PositionAutomaton::relevant(std::uint64_t m) const {
  const std::size_t n = edges_.size();
  std::vector<bool> out(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<bool> f(n);
    f[e] = true;
    std::set<std::pair<std::vector<bool>, std::uint64_t>> visited;
    for (std::uint64_t j = 1;; ++j) {
      std::uint64_t clock = canonical(j + m);
      if (!visited.emplace(f, clock).second) break;
      const auto& pm = pos_[clock - 1];
      bool hit = false;
      bool any = false;
      for (std::size_t a = 0; a < n && !hit; ++a) {
        if (!f[a]) continue;
        any = true;
        for (std::size_t b = 0; b < n; ++b) {
          if (pm[b] && meets_[a][b]) {
            hit = true;
            break;
          }
        }
      }
      if (hit) {
        out[e] = true;
        break;
      }
      if (!any) break;
      std::vector<bool> next(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (!f[a]) continue;
        for (std::size_t b = 0; b < n; ++b) next[b] = next[b] || succ_[a][b];
      }
      f = std::move(next);
    }
  }
  return out;
}

AlgebraElement epsilon_candidate(const Presentation& p, std::int64_t n) {
  if (!p.edges_finite()) throw Error(ErrorCode::NotFiniteEdges, "local units need finitely many edges");
  if (n == 0) {
    if (!is_unital(p)) throw Error(ErrorCode::NotUnital, "G^0 is not a generalized vertex");
    return AlgebraElement::monomial(p, 1, {}, p.universe(), {});
  }
  if (n > 0) {
    AlgebraElement r = AlgebraElement::zero(p);
    for (const auto& a : paths_of_length(p, static_cast<std::size_t>(n))) {
      r += AlgebraElement::monomial(p, 1, a, p.range(a.back()), a);
    }
    return r;
  }
  PositionAutomaton aut(p);
  VertexSet a = aut.ranges_at(static_cast<std::uint64_t>(-n));
  return AlgebraElement::monomial(p, 1, {}, a, {});
}

EpsilonCheck verify_epsilon(const Presentation& p, std::int64_t n, const AlgebraElement& cand, unsigned ck2_depth) {
  if (!p.edges_finite()) throw Error(ErrorCode::NotFiniteEdges, "local units need finitely many edges");
  if (n == 0) {
    if (!is_unital(p)) return {false, "T_0 has no unit: G^0 is not a generalized vertex"};
    if (cand == AlgebraElement::monomial(p, 1, {}, p.universe(), {})) return {true, "p_{G^0} is the unit"};
    return {false, "degree 0 needs p_{G^0}"};
  }
  if (n > 0) {
    auto paths = paths_of_length(p, static_cast<std::size_t>(n));
    if (paths.empty()) {
      return cand.is_zero() ? EpsilonCheck{true, "T_n = 0"} : EpsilonCheck{false, "T_n = 0 but candidate is nonzero"};
    }
    for (const auto& [k, c] : cand.terms()) {
      if (k.alpha.size() != k.beta.size() || k.alpha.size() < static_cast<std::size_t>(n)) {
        return {false, "candidate is not in T_n T_-n"};
      }
    }
    for (const auto& a : paths) {
      auto s = AlgebraElement::path(p, a);
      if (!equal_mod_ck2(cand * s, s, ck2_depth)) {
        return {false, "candidate does not fix s_" + p.path_label(a)};
      }
    }
    return {true, "fixes s_alpha for every path of length " + std::to_string(n)};
  }
  const auto m = static_cast<std::uint64_t>(-n);
  PositionAutomaton aut(p);
  VertexSet rm = aut.ranges_at(m);
  if (rm.is_empty()) {
    return cand.is_zero() ? EpsilonCheck{true, "T_n = 0"} : EpsilonCheck{false, "T_n = 0 but candidate is nonzero"};
  }
  if (cand.size() != 1) return {false, "candidate is not a single projection"};
  const auto& [k, c] = *cand.terms().begin();
  if (c != 1 || !k.alpha.empty() || !k.beta.empty()) return {false, "candidate is not a projection p_A"};
  if (!k.set.is_subset_of(rm)) return {false, "A is not contained in the ranges of paths of length " + std::to_string(m)};
  if (!rm.is_subset_of(k.set)) return {false, "A misses r(alpha) for some path of length " + std::to_string(m)};
  auto rel = aut.relevant(m);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (rel[i] && !k.set.contains(p.source(aut.edges()[i]))) {
      return {false, "A misses s(" + p.edge_label(aut.edges()[i]) + ")"};
    }
  }
  return {true, "contains every range of length " + std::to_string(m) + " and every relevant source"};
}

EpsilonCertificate find_epsilon_certificate(const Presentation& p, unsigned shown, unsigned ck2_depth) {
  EpsilonCertificate cert;
  if (!p.edges_finite()) {
    cert.note = "G^1 is infinite";
    return cert;
  }
  if (!is_unital(p)) {
    cert.failing_degree = 0;
    cert.note = "G^0 is not a generalized vertex";
    return cert;
  }
  PositionAutomaton aut(p);
  for (std::uint64_t m = 1; m < aut.start() + aut.period(); ++m) {
    auto n = -static_cast<std::int64_t>(m);
    auto cand = epsilon_candidate(p, n);
    auto check = verify_epsilon(p, n, cand, ck2_depth);
    if (!check.ok) {
      cert.failing_degree = n;
      cert.note = "degree " + std::to_string(n) + ": " + check.reason;
      return cert;
    }
  }
  for (std::int64_t n = -static_cast<std::int64_t>(shown); n <= static_cast<std::int64_t>(shown); ++n) {
    auto cand = epsilon_candidate(p, n);
    if (n > 0 && !verify_epsilon(p, n, cand, ck2_depth).ok) {
      cert.failing_degree = n;
      cert.note = "degree " + std::to_string(n) + ": symbolic check failed";
      return cert;
    }
    cert.units.emplace_back(n, std::move(cand));
  }
  cert.found = true;
  const auto classes = aut.start() + aut.period() - 1;
  cert.note = "negative degrees checked over " + std::to_string(classes) + (classes == 1 ? " class" : " classes") +
              " (position preperiod " + std::to_string(aut.start()) + ", period " +
              std::to_string(aut.period()) + "); positive degrees use the path-sum unit";
  return cert;
}

namespace {

void require_strongly_graded(const Presentation& p) {
  auto s = structural_report(p);
  if (s.has_sinks) throw Error(ErrorCode::NotStronglyGraded, "has a sink");
  if (!s.row_finite) throw Error(ErrorCode::NotStronglyGraded, "not row-finite");
  auto y = check_condition_y_bounded(p);
  using S = ConditionYVerdict::Status;
  if (y.status != S::Holds && y.status != S::HoldsByNoSources) {
    throw Error(ErrorCode::NotStronglyGraded, std::string("Condition (Y) is ") + status_name(y.status));
  }
}

}  // namespace

Factorization strong_factorization(const Presentation& p, VertexRef v, int n, unsigned max_depth, unsigned ck2_depth) {
  if (n != 1 && n != -1) throw Error(ErrorCode::InvalidArgument, "degree must be 1 or -1");
  if (!p.is_valid_vertex(v)) throw Error(ErrorCode::DanglingReference, "vertex outside G^0");
  require_strongly_graded(p);
  Factorization f;
  f.target = v;
  f.n = n;
  if (n == 1) {
    for (const auto& e : p.out_edges(v)) f.pairs.emplace_back(AlgebraElement::s(p, e), AlgebraElement::s_star(p, e));
  } else {
    // Pieces s_gamma p_u s_gamma^* summing to p_v. A piece is closed by a
    // path delta, |delta| = |gamma| + 1, with u in r(delta); otherwise it is
    // split along the edges leaving u.
    std::deque<std::pair<EdgePath, VertexRef>> work{{{}, v}};
    while (!work.empty()) {
      auto [gamma, u] = std::move(work.front());
      work.pop_front();
      if (auto delta = incoming_path(p, u, gamma.size() + 1)) {
        f.pairs.emplace_back(AlgebraElement::monomial(p, 1, gamma, p.singleton(u), *delta),
                             AlgebraElement::monomial(p, 1, *delta, p.singleton(u), gamma));
        continue;
      }
      if (gamma.size() + 1 > max_depth) {
        throw Error(ErrorCode::BoundExceeded, "factorization depth bound " + std::to_string(max_depth) + " exceeded");
      }
      for (const auto& e : p.out_edges(u)) {
        EdgePath g = gamma;
        g.push_back(e);
        for (const auto& w : p.range(e).elements()) work.emplace_back(g, w);
      }
      if (work.size() > kMaxTerms) throw Error(ErrorCode::TermCountCap, "factorization exceeds the term cap");
    }
  }
  f.verified = verify_factorization(p, f, ck2_depth);
  return f;
}

bool verify_factorization(const Presentation& p, const Factorization& f, unsigned ck2_depth) {
  AlgebraElement sum = AlgebraElement::zero(p);
  for (const auto& [a, b] : f.pairs) {
    if (!a.is_zero() && z_degree(a) != f.n) return false;
    if (!b.is_zero() && z_degree(b) != -f.n) return false;
    sum += a * b;
  }
  return equal_mod_ck2(sum, AlgebraElement::vertex(p, f.target), ck2_depth);
}

}  // namespace ultragrade
