#include "ultragrade/algebra.hpp"

#include <algorithm>

#include "ultragrade/error.hpp"
#include "ultragrade/lattice.hpp"

namespace ultragrade {

namespace {

void check_path(const Presentation& p, const EdgePath& a) {
  if (a.size() > kMaxPathLength) {
    throw Error(ErrorCode::PathLengthCap, "path longer than " + std::to_string(kMaxPathLength) + " edges");
  }
  if (!a.empty() && !p.is_path(a)) throw Error(ErrorCode::InvalidArgument, "not a path: " + p.path_label(a));
}

bool is_prefix(const EdgePath& a, const EdgePath& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

EdgePath concat(const EdgePath& a, EdgePath::const_iterator from, EdgePath::const_iterator to) {
  EdgePath r = a;
  r.insert(r.end(), from, to);
  return r;
}

void check_size(std::size_t n) {
  if (n > kMaxTerms) throw Error(ErrorCode::TermCountCap, "more than " + std::to_string(kMaxTerms) + " terms");
}

// Product of two normalized monomials; nullopt when it vanishes.
std::optional<MonomialKey> multiply_keys(const Presentation& p, const MonomialKey& x, const MonomialKey& y) {
  const auto& [alpha, a, beta] = x;
  const auto& [gamma, b, delta] = y;
  if (is_prefix(beta, gamma)) {
    if (beta.size() == gamma.size()) {
      VertexSet c = a & b;
      if (c.is_empty()) return std::nullopt;
      return MonomialKey{alpha, std::move(c), delta};
    }
    if (!a.contains(p.source(gamma[beta.size()]))) return std::nullopt;
    return MonomialKey{concat(alpha, gamma.begin() + static_cast<std::ptrdiff_t>(beta.size()), gamma.end()), b, delta};
  }
  if (is_prefix(gamma, beta)) {
    if (!b.contains(p.source(beta[gamma.size()]))) return std::nullopt;
    return MonomialKey{alpha, a, concat(delta, beta.begin() + static_cast<std::ptrdiff_t>(gamma.size()), beta.end())};
  }
  return std::nullopt;
}

std::string coefficient_prefix(const Coefficient& c, bool first) {
  std::string out;
  Coefficient mag = c;
  if (c < 0) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  if (mag != 1) out += mag.str() + "*";
  return out;
}

}  // namespace

const Presentation& AlgebraElement::pres(const AlgebraElement& o) const {
  if (pres_ && o.pres_ && pres_ != o.pres_) {
    throw Error(ErrorCode::MixedPresentation, "elements of algebras over different presentations");
  }
  const Presentation* p = pres_ ? pres_ : o.pres_;
  if (!p) throw Error(ErrorCode::InvalidArgument, "element without presentation");
  return *p;
}

AlgebraElement AlgebraElement::monomial(const Presentation& p, Coefficient lambda, EdgePath alpha, VertexSet a,
                                        EdgePath beta) {
  check_path(p, alpha);
  check_path(p, beta);
  if (a.family_count() != p.family_count()) {
    throw Error(ErrorCode::MixedPresentation, "vertex set from a different presentation");
  }
  if (!alpha.empty()) a = a & p.range(alpha.back());
  if (!beta.empty()) a = a & p.range(beta.back());
  AlgebraElement x(p);
  if (a.is_empty() || lambda == 0) return x;
  x.terms_.emplace(MonomialKey{std::move(alpha), std::move(a), std::move(beta)}, std::move(lambda));
  return x;
}

AlgebraElement AlgebraElement::projection(const Presentation& p, const VertexSet& a) {
  if (a.family_count() != p.family_count()) {
    throw Error(ErrorCode::MixedPresentation, "vertex set from a different presentation");
  }
  if (!g0_contains(p, a).member) {
    throw Error(ErrorCode::InvalidArgument, "{" + p.set_label(a) + "} is not a generalized vertex");
  }
  return monomial(p, 1, {}, a, {});
}

AlgebraElement AlgebraElement::vertex(const Presentation& p, VertexRef v) {
  if (!p.is_valid_vertex(v)) throw Error(ErrorCode::DanglingReference, "vertex outside G^0");
  return monomial(p, 1, {}, p.singleton(v), {});
}

AlgebraElement AlgebraElement::s(const Presentation& p, EdgeInst e) { return path(p, {e}); }

AlgebraElement AlgebraElement::s_star(const Presentation& p, EdgeInst e) { return path_star(p, {e}); }

AlgebraElement AlgebraElement::path(const Presentation& p, const EdgePath& alpha) {
  if (alpha.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  check_path(p, alpha);
  return monomial(p, 1, alpha, p.range(alpha.back()), {});
}

AlgebraElement AlgebraElement::path_star(const Presentation& p, const EdgePath& alpha) {
  if (alpha.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  check_path(p, alpha);
  return monomial(p, 1, {}, p.range(alpha.back()), alpha);
}

void AlgebraElement::add_term(MonomialKey key, const Coefficient& lambda) {
  if (lambda == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), lambda);
  if (!inserted) {
    it->second += lambda;
    if (it->second == 0) terms_.erase(it);
  }
  check_size(terms_.size());
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  pres_ = &pres(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r += o;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::scaled(const Coefficient& c) const {
  AlgebraElement r;
  r.pres_ = pres_;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  const Presentation& p = pres(o);
  AlgebraElement r(p);
  for (const auto& [kx, cx] : terms_) {
    for (const auto& [ky, cy] : o.terms_) {
      auto k = multiply_keys(p, kx, ky);
      if (!k) continue;
      if (k->alpha.size() > kMaxPathLength || k->beta.size() > kMaxPathLength) {
        throw Error(ErrorCode::PathLengthCap, "product path longer than " + std::to_string(kMaxPathLength));
      }
      r.add_term(std::move(*k), cx * cy);
    }
  }
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  const Presentation& p = *pres_;
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    out += coefficient_prefix(c, first);
    first = false;
    for (const auto& e : k.alpha) out += "s(" + p.edge_label(e) + ")*";
    out += "p{" + p.set_label(k.set) + "}";
    for (auto it = k.beta.rbegin(); it != k.beta.rend(); ++it) out += "*st(" + p.edge_label(*it) + ")";
  }
  return out;
}

AlgebraElement star(const AlgebraElement& x) {
  if (!x.presentation()) return x;
  AlgebraElement r = AlgebraElement::zero(*x.presentation());
  for (const auto& [k, c] : x.terms()) r.add_term({k.beta, k.set, k.alpha}, c);
  return r;
}

namespace {

std::vector<EdgeInst> regular_out_edges(const Presentation& p, VertexRef v) {
  std::vector<EdgeInst> out;
  try {
    out = p.out_edges(v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteEmitter) throw;
    throw Error(ErrorCode::NotRegular, p.vertex_label(v) + " is an infinite emitter");
  }
  if (out.empty()) throw Error(ErrorCode::NotRegular, p.vertex_label(v) + " is a sink");
  return out;
}

bool is_regular(const Presentation& p, VertexRef v) {
  try {
    return !p.out_edges(v).empty();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfiniteEmitter) return false;
    throw;
  }
}

// s_alpha p_v s_beta^* = sum_{s(e)=v} s_{alpha e} p_{r(e)} s_{beta e}^*
void add_expansion(AlgebraElement& r, const Presentation& p, const MonomialKey& k, const std::vector<EdgeInst>& out,
                   const Coefficient& c) {
  for (const auto& e : out) {
    EdgePath a = k.alpha;
    a.push_back(e);
    EdgePath b = k.beta;
    b.push_back(e);
    if (a.size() > kMaxPathLength) throw Error(ErrorCode::PathLengthCap, "expansion beyond the path length cap");
    r.add_term({std::move(a), p.range(e), std::move(b)}, c);
  }
}

}  // namespace

AlgebraElement ck2_expand(const AlgebraElement& x, VertexRef v) {
  const Presentation& p = *x.presentation();
  auto out = regular_out_edges(p, v);
  AlgebraElement r = AlgebraElement::zero(p);
  for (const auto& [k, c] : x.terms()) {
    if (!k.set.contains(v)) {
      r.add_term(k, c);
      continue;
    }
    VertexSet rest = k.set - p.singleton(v);
    if (!rest.is_empty() && g0_contains(p, rest).member) {
      r.add_term({k.alpha, rest, k.beta}, c);
    } else if (!rest.is_empty()) {
      // A minus v is not a generalized vertex: keep p_A - p_v formally.
      r.add_term(k, c);
      r.add_term({k.alpha, p.singleton(v), k.beta}, -c);
    }
    add_expansion(r, p, k, out, c);
  }
  return r;
}

AlgebraElement expand_to_level(const AlgebraElement& x, std::size_t level) {
  const Presentation& p = *x.presentation();
  std::vector<std::pair<MonomialKey, Coefficient>> work(x.terms().begin(), x.terms().end());
  AlgebraElement r = AlgebraElement::zero(p);
  while (!work.empty()) {
    auto [k, c] = std::move(work.back());
    work.pop_back();
    if (!k.set.is_finite()) {
      r.add_term(std::move(k), c);
      continue;
    }
    auto elems = k.set.elements();
    if (elems.size() > 1) {
      for (const auto& u : elems) work.push_back({{k.alpha, p.singleton(u), k.beta}, c});
      check_size(work.size());
      continue;
    }
    VertexRef u = elems.front();
    if (std::min(k.alpha.size(), k.beta.size()) >= level || !is_regular(p, u)) {
      r.add_term(std::move(k), c);
      continue;
    }
    for (const auto& e : p.out_edges(u)) {
      EdgePath a = k.alpha;
      a.push_back(e);
      EdgePath b = k.beta;
      b.push_back(e);
      if (a.size() > kMaxPathLength) throw Error(ErrorCode::PathLengthCap, "expansion beyond the path length cap");
      work.push_back({{std::move(a), p.range(e), std::move(b)}, c});
    }
    check_size(work.size());
  }
  return r;
}

bool equal_mod_ck2(const AlgebraElement& x, const AlgebraElement& y, unsigned depth) {
  AlgebraElement d = x - y;
  if (d.is_zero()) return true;
  std::size_t level = 0;
  for (const auto& [k, c] : x.terms()) level = std::max(level, std::min(k.alpha.size(), k.beta.size()));
  for (const auto& [k, c] : y.terms()) level = std::max(level, std::min(k.alpha.size(), k.beta.size()));
  for (unsigned i = 0; i <= depth; ++i) {
    if (expand_to_level(d, level + i).is_zero()) return true;
  }
  return false;
}

std::int64_t z_degree(const AlgebraElement& x) {
  std::optional<std::int64_t> deg;
  for (const auto& [k, c] : x.terms()) {
    auto d = static_cast<std::int64_t>(k.alpha.size()) - static_cast<std::int64_t>(k.beta.size());
    if (deg && *deg != d) throw Error(ErrorCode::NotHomogeneous, "element is not Z-homogeneous");
    deg = d;
  }
  return deg.value_or(0);
}

FreeGroupWord f_degree(const AlgebraElement& x) {
  std::optional<FreeGroupWord> deg;
  for (const auto& [k, c] : x.terms()) {
    auto d = FreeGroupWord::quotient(k.alpha, k.beta);
    if (deg && *deg != d) throw Error(ErrorCode::NotHomogeneous, "element is not homogeneous in the free group grading");
    deg = std::move(d);
  }
  return deg.value_or(FreeGroupWord{});
}

AlgebraElement z_component(const AlgebraElement& x, std::int64_t n) {
  if (!x.presentation()) return x;
  AlgebraElement r = AlgebraElement::zero(*x.presentation());
  for (const auto& [k, c] : x.terms()) {
    if (static_cast<std::int64_t>(k.alpha.size()) - static_cast<std::int64_t>(k.beta.size()) == n) r.add_term(k, c);
  }
  return r;
}

namespace {

AlgebraElement unit_from(const AlgebraElement& x, bool right) {
  const Presentation& p = *x.presentation();
  VertexSet u = p.empty_set();
  for (const auto& [k, c] : x.terms()) {
    const EdgePath& side = right ? k.beta : k.alpha;
    if (side.empty()) {
      u = u | k.set;
    } else {
      u.insert(p.source(side.front()));
    }
  }
  if (u.is_empty()) return AlgebraElement::zero(p);
  return AlgebraElement::monomial(p, 1, {}, u, {});
}

}  // namespace

AlgebraElement t0_right_unit(const AlgebraElement& x) { return unit_from(x, true); }

AlgebraElement t0_left_unit(const AlgebraElement& x) { return unit_from(x, false); }

std::vector<EdgePath> paths_of_length(const Presentation& p, std::size_t n) {
  if (!p.edges_finite()) throw Error(ErrorCode::NotFiniteEdges, "path enumeration needs finitely many edges");
  if (n == 0) return {};
  std::vector<EdgePath> cur;
  for (const auto& e : p.all_edges()) cur.push_back({e});
  auto edges = p.all_edges();
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<EdgePath> next;
    for (const auto& a : cur) {
      for (const auto& e : edges) {
        if (!p.composable(a.back(), e)) continue;
        next.push_back(a);
        next.back().push_back(e);
        if (next.size() > kMaxTerms) {
          throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(kMaxTerms) + " paths of length " +
                                                    std::to_string(n));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ultragrade
