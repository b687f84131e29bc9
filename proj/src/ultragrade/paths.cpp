#include "ultragrade/paths.hpp"

#include <algorithm>

#include "ultragrade/error.hpp"

namespace ultragrade {

EdgeInst InfinitePath::edge_at(std::uint64_t k) const {
  if (k < prefix.size()) return prefix[k];
  k -= prefix.size();
  if (tail == Tail::Cycle) return cycle.at(k % cycle.size());
  return EdgeInst::of_family(family, start + k);
}

EdgePath InfinitePath::unroll(std::size_t depth) const {
  EdgePath out;
  out.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) out.push_back(edge_at(k));
  return out;
}

bool family_self_chains(const Presentation& p, std::uint32_t family, std::uint64_t start) {
  if (family >= p.edge_families().size()) return false;
  const auto& f = p.edge_families()[family];
  if (start < f.first) return false;
  // A range term other than the shifted source matches at most one member,
  // so chaining for all n requires the shifted source among the terms.
  const auto& s = f.source;
  const Affine shifted{s.index.slope, s.index.offset + static_cast<std::int64_t>(s.index.slope)};
  return std::any_of(f.range.begin(), f.range.end(),
                     [&](const VertexTemplate& t) { return t.family == s.family && t.index == shifted; });
}

bool is_valid_infinite_path(const Presentation& p, const InfinitePath& x) {
  if (!p.is_path(x.prefix)) return false;
  EdgeInst first;
  if (x.tail == InfinitePath::Tail::Cycle) {
    if (x.cycle.empty() || !p.is_path(x.cycle)) return false;
    if (!p.composable(x.cycle.back(), x.cycle.front())) return false;
    first = x.cycle.front();
  } else {
    if (!family_self_chains(p, x.family, x.start)) return false;
    first = EdgeInst::of_family(x.family, x.start);
  }
  return x.prefix.empty() || p.composable(x.prefix.back(), first);
}

InfinitePath shift_path(const InfinitePath& x) {
  InfinitePath y = x;
  if (!y.prefix.empty()) {
    y.prefix.erase(y.prefix.begin());
  } else if (y.tail == InfinitePath::Tail::Cycle) {
    std::rotate(y.cycle.begin(), y.cycle.begin() + 1, y.cycle.end());
  } else {
    ++y.start;
  }
  return y;
}

InfinitePath shift_path(const InfinitePath& x, std::uint64_t times) {
  InfinitePath y = x;
  std::uint64_t drop = std::min<std::uint64_t>(times, y.prefix.size());
  y.prefix.erase(y.prefix.begin(), y.prefix.begin() + static_cast<std::ptrdiff_t>(drop));
  times -= drop;
  if (times == 0) return y;
  if (y.tail == InfinitePath::Tail::Cycle) {
    std::rotate(y.cycle.begin(), y.cycle.begin() + static_cast<std::ptrdiff_t>(times % y.cycle.size()), y.cycle.end());
  } else {
    y.start += times;
  }
  return y;
}

InfinitePath prepend(const EdgePath& alpha, const InfinitePath& x) {
  InfinitePath y = x;
  y.prefix.insert(y.prefix.begin(), alpha.begin(), alpha.end());
  return y;
}

std::string infinite_path_label(const Presentation& p, const InfinitePath& x) {
  std::string out = p.path_label(x.prefix);
  if (!out.empty()) out += " . ";
  if (x.tail == InfinitePath::Tail::Cycle) {
    out += "(" + p.path_label(x.cycle) + ")^inf";
  } else {
    out += "FamilyTail(" + p.edge_families().at(x.family).id + "," + std::to_string(x.start) + ")";
  }
  return out;
}

}  // namespace ultragrade
