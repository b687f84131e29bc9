#pragma once

#include <optional>
#include <vector>

#include "ultragrade/presentation.hpp"

namespace ultragrade {

/// Decomposition of a generalized vertex as F u I_1 u ... u I_k, F finite and
/// each I_j the (nonempty) intersection of the ranges of the listed
/// individually specified edges.
struct GeneralizedVertexWitness {
  std::vector<std::vector<std::uint32_t>> intersections;  // edge indices
  std::vector<VertexRef> finite_part;
};

struct G0Membership {
  bool member = false;
  std::optional<GeneralizedVertexWitness> witness;
};

/// Upper bound on visited edge subsets during intersection enumeration.
inline constexpr std::size_t kMaxIntersectionSubsets = std::size_t{1} << 20;

/// Decides A in G^0. Membership holds iff A minus the union of all range
/// intersections contained in A is finite; the empty set is not a member.
G0Membership g0_contains(const Presentation& p, const VertexSet& a);

/// Re-evaluates a witness to the set it denotes.
VertexSet evaluate_witness(const Presentation& p, const GeneralizedVertexWitness& w);

/// Brute-force closure of singletons and ranges under union and nonempty
/// intersection. Requires finite G^0 with at most 64 vertices; subsets are
/// bitmasks over `p.vertices()` order.
std::vector<std::uint64_t> g0_closure_finite(const Presentation& p);

/// L_R(G) is unital iff G^0 is a generalized vertex.
bool is_unital(const Presentation& p);

}  // namespace ultragrade
