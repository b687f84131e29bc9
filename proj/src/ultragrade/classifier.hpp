#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultragrade/certificates.hpp"
#include "ultragrade/condition_y.hpp"
#include "ultragrade/structure.hpp"

namespace ultragrade {

enum class GradingProperty { StrongZ, EpsStrongZ, StrongF, EpsStrongF, GaugeSaturated };
enum class VerdictStatus { Yes, No, Undetermined, Unknown };

const char* property_name(GradingProperty p);
const char* verdict_status_name(VerdictStatus s);

struct Reason {
  std::string predicate;  // e.g. "row-finite"
  std::string outcome;    // e.g. "false: v[0] emits infinitely many edges"
  bool supports = false;  // outcome is on the Yes side of the criterion
};

struct GradingVerdict {
  GradingProperty property = GradingProperty::StrongZ;
  VerdictStatus status = VerdictStatus::Unknown;
  std::string rule;  // criterion applied
  std::vector<Reason> reasons;
  std::optional<EpsilonCertificate> epsilon;
  std::vector<Factorization> factorizations;
  std::string note;
};

struct ClassifierOptions {
  std::uint64_t horizon = kDefaultHorizon;
  unsigned ck2_depth = kDefaultCk2Depth;
  /// Attach strong factorizations for every vertex of a finite G^0 with at
  /// most this many vertices (0 disables).
  std::size_t factorization_vertices = 16;
};

GradingVerdict classify_strong_z(const Presentation& p, const ClassifierOptions& opt = {});
GradingVerdict classify_eps_strong_z(const Presentation& p, const ClassifierOptions& opt = {});
/// Throws NoEdges: the free group grading needs at least one edge.
GradingVerdict classify_strong_f(const Presentation& p);
GradingVerdict classify_eps_strong_f(const Presentation& p);
/// Saturation of the gauge action on the C*-algebra; same criterion as the
/// strong Z-grading.
GradingVerdict gauge_saturation(const Presentation& p, const ClassifierOptions& opt = {});

}  // namespace ultragrade
