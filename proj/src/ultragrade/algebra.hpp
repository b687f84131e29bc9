#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultragrade/free_group.hpp"
#include "ultragrade/presentation.hpp"

namespace ultragrade {

using Coefficient = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxPathLength = 64;
inline constexpr std::size_t kMaxTerms = 10000;
inline constexpr unsigned kDefaultCk2Depth = 3;

/// s_alpha p_A s_beta^*, normalized so that A is nonempty and contained in
/// r(alpha) (if alpha is nonempty) and r(beta) (if beta is nonempty).
struct MonomialKey {
  EdgePath alpha;
  VertexSet set;
  EdgePath beta;
  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

/// Finite linear combination of normalized monomials over Q.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Presentation& p) : pres_(&p) {}

  static AlgebraElement zero(const Presentation& p) { return AlgebraElement(p); }
  /// lambda s_alpha p_A s_beta^*. Normalizes A; returns zero if the
  /// normalized set is empty. Throws on invalid paths and the length cap.
  static AlgebraElement monomial(const Presentation& p, Coefficient lambda, EdgePath alpha, VertexSet a, EdgePath beta);
  /// p_A; A must be a generalized vertex.
  static AlgebraElement projection(const Presentation& p, const VertexSet& a);
  static AlgebraElement vertex(const Presentation& p, VertexRef v);
  static AlgebraElement s(const Presentation& p, EdgeInst e);
  static AlgebraElement s_star(const Presentation& p, EdgeInst e);
  /// s_alpha and s_alpha^* for nonempty alpha.
  static AlgebraElement path(const Presentation& p, const EdgePath& alpha);
  static AlgebraElement path_star(const Presentation& p, const EdgePath& alpha);

  const Presentation* presentation() const { return pres_; }
  const std::map<MonomialKey, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(const Coefficient& c) const;
  AlgebraElement& operator+=(const AlgebraElement& o);

  /// Adds lambda times an already-normalized key.
  void add_term(MonomialKey key, const Coefficient& lambda);

  std::string to_string() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  const Presentation& pres(const AlgebraElement& o) const;

  const Presentation* pres_ = nullptr;
  std::map<MonomialKey, Coefficient> terms_;
};

AlgebraElement star(const AlgebraElement& x);

/// Applies p_v = sum_{s(e)=v} s_e s_e^* to every monomial whose set contains
/// v. Requires v regular.
AlgebraElement ck2_expand(const AlgebraElement& x, VertexRef v);

/// Splits finite sets into singletons and expands regular vertices until
/// both paths of every monomial have length at least `level`. The result is
/// a normal form for elements whose monomials all reach that level.
AlgebraElement expand_to_level(const AlgebraElement& x, std::size_t level);

/// Sound equality: the difference vanishes syntactically after expansion to
/// some level in [L, L + depth], L the largest short-path length present.
/// False means "not shown equal".
bool equal_mod_ck2(const AlgebraElement& x, const AlgebraElement& y, unsigned depth = kDefaultCk2Depth);

/// Z-degree |alpha| - |beta| of a homogeneous element; throws NotHomogeneous.
/// Zero has degree 0.
std::int64_t z_degree(const AlgebraElement& x);
/// Degree alpha beta^{-1} in the free group on G^1; throws NotHomogeneous.
FreeGroupWord f_degree(const AlgebraElement& x);
/// Sum of the monomials with Z-degree n.
AlgebraElement z_component(const AlgebraElement& x, std::int64_t n);

/// Units for elements of T_0: p_C x = x and x p_B = x, with B the union over
/// monomials of {s(beta_1)} (or A when beta is empty) and C likewise from
/// alpha.
AlgebraElement t0_right_unit(const AlgebraElement& x);
AlgebraElement t0_left_unit(const AlgebraElement& x);

/// All paths of length n (finite G^1). n == 0 yields no paths.
std::vector<EdgePath> paths_of_length(const Presentation& p, std::size_t n);

}  // namespace ultragrade
