#pragma once

#include <optional>
#include <string>

#include "ultragrade/paths.hpp"

namespace ultragrade {

/// N'(v) = { l >= 1 : v in r(alpha) for some path alpha with |alpha| = l },
/// for every vertex of a finite ultragraph. All sets share one preperiod and
/// period, taken from the first repetition of the per-length state.
struct LengthProfile {
  std::vector<VertexRef> vertices;
  std::vector<IndexSet> lengths;  // parallel to `vertices`
  std::size_t preperiod = 0;      // first length of the periodic part
  std::size_t period = 1;

  const IndexSet& of(VertexRef v) const;
};

LengthProfile incoming_length_profile(const Presentation& p);

struct ConditionYVerdict {
  enum class Status { Holds, Fails, HoldsByNoSources, ViolationUpToHorizon, Unknown };
  Status status = Status::Unknown;
  std::optional<InfinitePath> witness;  // Fails, ViolationUpToHorizon
  std::uint64_t horizon = 0;            // ViolationUpToHorizon, Unknown
  std::string note;
};

const char* status_name(ConditionYVerdict::Status s);

inline constexpr std::uint64_t kDefaultHorizon = 40;

/// Exact decision for presentations with finitely many edges. Condition (Y)
/// fails iff some infinite path has, at every step k, no path of length k+1
/// ending in a range that contains the source of its (k+1)-th edge. Over the
/// product of edges with the eventually periodic clock of "edges reachable at
/// position j" such a path is an infinite walk through bad states, so a bad
/// state cycle reachable from time 0 exists, and the returned lasso is its
/// unrolling.
ConditionYVerdict decide_condition_y(const Presentation& p);

/// Semi-decision for arbitrary presentations: no sources gives
/// HoldsByNoSources; finitely many edges delegates to decide_condition_y;
/// otherwise lassos over individual edges and edge-family tails are checked
/// for k = 0..horizon.
ConditionYVerdict check_condition_y_bounded(const Presentation& p, std::uint64_t horizon = kDefaultHorizon);

struct ConditionYWitness {
  std::uint64_t k = 0;
  EdgePath alpha;  // |alpha| = k + m
};

/// Smallest k <= horizon with a path alpha, |alpha| = k + m, such that
/// alpha . sigma^k(x) is an infinite path; nullopt if none up to the horizon.
std::optional<ConditionYWitness> condition_y_witness(const Presentation& p, const InfinitePath& x, std::uint64_t m,
                                                     std::uint64_t horizon = kDefaultHorizon);

/// Some path of length `length` has `v` in its range; returns one.
std::optional<EdgePath> incoming_path(const Presentation& p, VertexRef v, std::uint64_t length);

}  // namespace ultragrade
