#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultragrade/algebra.hpp"

namespace ultragrade {

/// Z-grading data for finitely many edges: which edges can occur at position
/// j of a path (eventually periodic in j) and the derived per-degree sets.
class PositionAutomaton {
 public:
  explicit PositionAutomaton(const Presentation& p);

  const std::vector<EdgeInst>& edges() const { return edges_; }
  /// Indices of edges that are the j-th edge (1-based) of some path.
  std::vector<bool> position(std::uint64_t j) const;
  /// Canonical representative of j in [1, start + period).
  std::uint64_t canonical(std::uint64_t j) const;
  std::uint64_t start() const { return start_; }
  std::uint64_t period() const { return period_; }

  /// R_m: union of r(alpha) over |alpha| = m.
  VertexSet ranges_at(std::uint64_t m) const;
  /// Edges e starting some alpha, |alpha| = j >= 1, with r(alpha) meeting
  /// r(beta) for some |beta| = j + m. Only these edges start a nonzero
  /// monomial of degree -m.
  std::vector<bool> relevant(std::uint64_t m) const;

 private:
  const Presentation& p_;
  std::vector<EdgeInst> edges_;
  std::vector<std::vector<bool>> succ_;
  std::vector<std::vector<bool>> meets_;
  std::vector<std::vector<bool>> pos_;  // pos_[j-1]
  std::uint64_t start_ = 1;
  std::uint64_t period_ = 1;
};

/// Candidate local unit: sum of s_alpha s_alpha^* over |alpha| = n for n > 0,
/// p_{R_{-n}} for n < 0, p_{G^0} for n = 0.
AlgebraElement epsilon_candidate(const Presentation& p, std::int64_t n);

struct EpsilonCheck {
  bool ok = false;
  std::string reason;
};

/// Checks cand in T_n T_{-n} and cand s = s for all s in T_n through a
/// finite test family. Together over all n (with self-adjoint candidates)
/// these give the two-sided unit equalities.
EpsilonCheck verify_epsilon(const Presentation& p, std::int64_t n, const AlgebraElement& cand,
                            unsigned ck2_depth = kDefaultCk2Depth);

struct EpsilonCertificate {
  bool found = false;
  std::vector<std::pair<std::int64_t, AlgebraElement>> units;  // the degrees shown
  std::optional<std::int64_t> failing_degree;
  std::string note;
};

/// Searches local units for every degree. Positive degrees always admit the
/// candidate; negative degrees are decided for one degree per class of the
/// position automaton. `shown` bounds the degrees kept in `units`.
EpsilonCertificate find_epsilon_certificate(const Presentation& p, unsigned shown = 2,
                                            unsigned ck2_depth = kDefaultCk2Depth);

struct Factorization {
  VertexRef target;
  int n = 1;
  std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
  bool verified = false;
};

inline constexpr unsigned kDefaultFactorizationDepth = 32;

/// p_v = sum a_i b_i with deg a_i = n, deg b_i = -n, n = +-1. Requires the
/// algebra to be strongly Z-graded (no sinks, row-finite, Condition (Y)).
Factorization strong_factorization(const Presentation& p, VertexRef v, int n,
                                   unsigned max_depth = kDefaultFactorizationDepth,
                                   unsigned ck2_depth = kDefaultCk2Depth);

/// Recomputes sum a_i b_i and compares with p_v modulo bounded CK2.
bool verify_factorization(const Presentation& p, const Factorization& f, unsigned ck2_depth = kDefaultCk2Depth);

}  // namespace ultragrade
