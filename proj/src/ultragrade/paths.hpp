#pragma once

#include <string>

#include "ultragrade/presentation.hpp"

namespace ultragrade {

/// Eventually periodic infinite path: a finite prefix followed either by a
/// cycle repeated forever or by consecutive members f[n], f[n+1], ... of an
/// edge family.
struct InfinitePath {
  enum class Tail { Cycle, FamilyTail };

  EdgePath prefix;
  Tail tail = Tail::Cycle;
  EdgePath cycle;             // Tail::Cycle
  std::uint32_t family = 0;   // Tail::FamilyTail
  std::uint64_t start = 0;    // Tail::FamilyTail

  static InfinitePath lasso(EdgePath prefix, EdgePath cycle) {
    return {std::move(prefix), Tail::Cycle, std::move(cycle), 0, 0};
  }
  static InfinitePath family_tail(EdgePath prefix, std::uint32_t family, std::uint64_t start) {
    return {std::move(prefix), Tail::FamilyTail, {}, family, start};
  }

  /// k-th edge, 0-based.
  EdgeInst edge_at(std::uint64_t k) const;
  /// First `depth` edges.
  EdgePath unroll(std::size_t depth) const;

  friend bool operator==(const InfinitePath&, const InfinitePath&) = default;
};

/// True iff every finite truncation is a path of `p`.
bool is_valid_infinite_path(const Presentation& p, const InfinitePath& x);
/// True iff f[n], f[n+1], ... composes for every n >= start.
bool family_self_chains(const Presentation& p, std::uint32_t family, std::uint64_t start);

/// sigma(e1 e2 e3 ...) = e2 e3 ...
InfinitePath shift_path(const InfinitePath& x);
InfinitePath shift_path(const InfinitePath& x, std::uint64_t times);
/// alpha . x
InfinitePath prepend(const EdgePath& alpha, const InfinitePath& x);

std::string infinite_path_label(const Presentation& p, const InfinitePath& x);

}  // namespace ultragrade
