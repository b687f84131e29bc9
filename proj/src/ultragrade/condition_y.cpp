#include "ultragrade/condition_y.hpp"

#include <boost/dynamic_bitset.hpp>
#include <map>

#include "ultragrade/error.hpp"
#include "ultragrade/structure.hpp"

namespace ultragrade {

using Bits = boost::dynamic_bitset<>;

const char* status_name(ConditionYVerdict::Status s) {
  switch (s) {
    case ConditionYVerdict::Status::Holds: return "Holds";
    case ConditionYVerdict::Status::Fails: return "Fails";
    case ConditionYVerdict::Status::HoldsByNoSources: return "HoldsByNoSources";
    case ConditionYVerdict::Status::ViolationUpToHorizon: return "ViolationUpToHorizon";
    case ConditionYVerdict::Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

const IndexSet& LengthProfile::of(VertexRef v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == v) return lengths[i];
  }
  throw Error(ErrorCode::InvalidArgument, "vertex not in profile");
}

LengthProfile incoming_length_profile(const Presentation& p) {
  if (!p.is_finite()) throw Error(ErrorCode::NotFinite, "length profile needs a finite ultragraph");
  LengthProfile prof;
  prof.vertices = p.vertices();
  const auto edges = p.all_edges();
  const std::size_t nv = prof.vertices.size();
  auto bits_of = [&](const VertexSet& s) {
    Bits b(nv);
    for (std::size_t i = 0; i < nv; ++i) b[i] = s.contains(prof.vertices[i]);
    return b;
  };
  std::vector<Bits> ranges, sources;
  for (auto e : edges) {
    ranges.push_back(bits_of(p.range(e)));
    sources.push_back(bits_of(p.singleton(p.source(e))));
  }
  // states[l-1] = R_l, the union of r(alpha) over |alpha| = l.
  std::vector<Bits> states;
  std::map<Bits, std::size_t> seen;
  Bits cur(nv);
  for (std::size_t i = 0; i < edges.size(); ++i) cur |= ranges[i];
  while (!seen.count(cur)) {
    seen[cur] = states.size() + 1;
    states.push_back(cur);
    Bits next(nv);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (sources[i].intersects(cur)) next |= ranges[i];
    }
    cur = next;
  }
  prof.preperiod = seen[cur];
  prof.period = states.size() + 1 - prof.preperiod;
  for (std::size_t vi = 0; vi < nv; ++vi) {
    std::vector<bool> prefix(prof.preperiod, false), period(prof.period, false);
    for (std::size_t l = 1; l < prof.preperiod; ++l) prefix[l] = states[l - 1][vi];
    for (std::size_t r = 0; r < prof.period; ++r) period[r] = states[prof.preperiod - 1 + r][vi];
    prof.lengths.push_back(IndexSet::from_bits(std::move(prefix), std::move(period)));
  }
  return prof;
}

namespace {

// Edge positions: pos[j-1] = edges occurring at position j (1-based) of some
// path, eventually periodic from index `start` with period `period`.
struct PositionProfile {
  std::vector<Bits> pos;
  std::size_t start = 0;  // 1-based position at which the cycle begins
  std::size_t period = 1;

  std::size_t canonical(std::size_t j) const {
    if (j < start + period) return j;
    return start + (j - start) % period;
  }
  const Bits& at(std::size_t j) const { return pos[canonical(j) - 1]; }
};

PositionProfile position_profile(const std::vector<std::vector<bool>>& comp) {
  const std::size_t ne = comp.size();
  PositionProfile prof;
  std::map<Bits, std::size_t> seen;
  Bits cur(ne);
  cur.set();
  while (!seen.count(cur)) {
    seen[cur] = prof.pos.size() + 1;
    prof.pos.push_back(cur);
    Bits next(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      if (!cur[e]) continue;
      for (std::size_t f = 0; f < ne; ++f) {
        if (comp[e][f]) next[f] = true;
      }
    }
    cur = next;
  }
  prof.start = seen[cur];
  prof.period = prof.pos.size() + 1 - prof.start;
  return prof;
}

}  // namespace

ConditionYVerdict decide_condition_y(const Presentation& p) {
  if (!p.edges_finite()) throw Error(ErrorCode::NotFinite, "exact Condition (Y) decision needs finitely many edges");
  const auto edges = p.all_edges();
  const std::size_t ne = edges.size();
  std::vector<std::vector<bool>> comp(ne, std::vector<bool>(ne));
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t f = 0; f < ne; ++f) comp[e][f] = p.composable(edges[e], edges[f]);
  }
  const PositionProfile prof = position_profile(comp);
  // Product state (edge index, clock) where clock is the canonical position
  // j = k + 2 at which the edge would have to be reachable.
  const std::size_t clocks = prof.start + prof.period;
  auto id = [&](std::size_t e, std::size_t j) { return e * clocks + j; };
  auto bad = [&](std::size_t e, std::size_t j) { return !prof.at(j)[e]; };
  std::vector<int> color(ne * clocks, 0);  // 0 white, 1 on stack, 2 done
  struct Frame {
    std::size_t e, j, next_f;
  };
  for (std::size_t e0 = 0; e0 < ne; ++e0) {
    const std::size_t j0 = prof.canonical(2);
    if (!bad(e0, j0) || color[id(e0, j0)] != 0) continue;
    std::vector<Frame> stack{{e0, j0, 0}};
    color[id(e0, j0)] = 1;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next_f == ne) {
        color[id(top.e, top.j)] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t f = top.next_f++;
      if (!comp[top.e][f]) continue;
      std::size_t jn = prof.canonical(top.j + 1);
      if (!bad(f, jn)) continue;
      int c = color[id(f, jn)];
      if (c == 0) {
        color[id(f, jn)] = 1;
        stack.push_back({f, jn, 0});
      } else if (c == 1) {
        std::size_t at = 0;
        while (!(stack[at].e == f && stack[at].j == jn)) ++at;
        EdgePath prefix, cycle;
        for (std::size_t i = 0; i < at; ++i) prefix.push_back(edges[stack[i].e]);
        for (std::size_t i = at; i < stack.size(); ++i) cycle.push_back(edges[stack[i].e]);
        ConditionYVerdict v;
        v.status = ConditionYVerdict::Status::Fails;
        v.witness = InfinitePath::lasso(std::move(prefix), std::move(cycle));
        v.note = "infinite path through states with no replacement prefix";
        return v;
      }
    }
  }
  ConditionYVerdict v;
  v.status = ConditionYVerdict::Status::Holds;
  v.note = "exact decision over the edge/position product";
  return v;
}

namespace {

// Edge emitted by w whose range meets `target`; w must be a predecessor of it.
std::optional<EdgeInst> edge_into(const Presentation& p, VertexRef w, const VertexSet& target) {
  for (std::uint32_t i = 0; i < p.edges().size(); ++i) {
    const auto& e = p.edges()[i];
    if (e.source == w && e.range.intersects(target)) return EdgeInst::single(i);
  }
  for (std::uint32_t i = 0; i < p.edge_families().size(); ++i) {
    const auto& f = p.edge_families()[i];
    if (f.source.family != w.family) continue;
    IndexSet emitted;
    const auto& a = f.source.index;
    if (a.slope == 0) {
      if (static_cast<std::int64_t>(w.index) != a.offset) continue;
      emitted = IndexSet::progression(1, f.first);
    } else {
      std::int64_t d = static_cast<std::int64_t>(w.index) - a.offset;
      if (d < 0 || d % static_cast<std::int64_t>(a.slope) != 0) continue;
      auto n = static_cast<std::uint64_t>(d) / a.slope;
      if (n < f.first) continue;
      emitted = IndexSet::singleton(n);
    }
    auto hit = emitted & p.family_members_hitting(i, target);
    if (auto n = hit.min()) return EdgeInst::of_family(i, *n);
  }
  return std::nullopt;
}

class BackwardLayers {
 public:
  BackwardLayers(const Presentation& p, VertexRef v) : p_(p) { layers_.push_back(p.singleton(v)); }

  // V_i: possible sources of the first edge of a length-i path ending at v.
  const VertexSet& layer(std::size_t i) {
    while (layers_.size() <= i) {
      if (layers_.back().is_empty()) return layers_.back();
      layers_.push_back(p_.predecessors(layers_.back()));
    }
    return layers_[i];
  }

  std::optional<EdgePath> path(std::size_t length) {
    if (length == 0 || layer(length).is_empty() || layers_.size() <= length) return std::nullopt;
    EdgePath alpha;
    VertexRef w = *layers_[length].min();
    for (std::size_t i = length; i >= 1; --i) {
      auto e = edge_into(p_, w, layers_[i - 1]);
      if (!e) throw Error(ErrorCode::InvalidArgument, "backward layer without a realizing edge");
      alpha.push_back(*e);
      if (i > 1) w = *(p_.range(*e) & layers_[i - 1]).min();
    }
    return alpha;
  }

 private:
  const Presentation& p_;
  std::vector<VertexSet> layers_;
};

}  // namespace

std::optional<EdgePath> incoming_path(const Presentation& p, VertexRef v, std::uint64_t length) {
  BackwardLayers layers(p, v);
  return layers.path(length);
}

std::optional<ConditionYWitness> condition_y_witness(const Presentation& p, const InfinitePath& x, std::uint64_t m,
                                                     std::uint64_t horizon) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  std::map<VertexRef, BackwardLayers> cache;
  for (std::uint64_t k = 0; k <= horizon; ++k) {
    VertexRef v = p.source(x.edge_at(k));
    auto it = cache.try_emplace(v, p, v).first;
    if (auto alpha = it->second.path(k + m)) return ConditionYWitness{k, std::move(*alpha)};
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxRepresentatives = 10000;
constexpr std::size_t kTailStarts = 3;
constexpr std::size_t kPrefixLength = 2;
constexpr std::size_t kCycleLength = 6;

// Individual-edge paths of length <= kPrefixLength ending with an edge that
// composes into `first` (or any edge when `first` is empty).
std::vector<EdgePath> prefixes_into(const Presentation& p, std::optional<EdgeInst> first) {
  std::vector<EdgePath> out{{}};
  std::vector<EdgePath> frontier{{}};
  for (std::size_t len = 1; len <= kPrefixLength; ++len) {
    std::vector<EdgePath> next;
    for (const auto& path : frontier) {
      for (std::uint32_t i = 0; i < p.edges().size(); ++i) {
        auto e = EdgeInst::single(i);
        if (!path.empty() && !p.composable(e, path.front())) continue;
        EdgePath q{e};
        q.insert(q.end(), path.begin(), path.end());
        next.push_back(q);
      }
    }
    for (const auto& q : next) {
      if (!first || p.composable(q.back(), *first)) out.push_back(q);
    }
    frontier = std::move(next);
  }
  return out;
}

void simple_cycles(const Presentation& p, std::vector<EdgePath>& out) {
  const auto n = static_cast<std::uint32_t>(p.edges().size());
  EdgePath stack;
  std::vector<bool> used(n);
  auto dfs = [&](auto&& self, std::uint32_t root) -> void {
    if (out.size() >= kMaxRepresentatives) return;
    EdgeInst last = stack.back();
    if (p.composable(last, EdgeInst::single(root))) out.push_back(stack);
    if (stack.size() >= kCycleLength) return;
    for (std::uint32_t i = root + 1; i < n; ++i) {
      if (used[i] || !p.composable(last, EdgeInst::single(i))) continue;
      used[i] = true;
      stack.push_back(EdgeInst::single(i));
      self(self, root);
      stack.pop_back();
      used[i] = false;
    }
  };
  for (std::uint32_t r = 0; r < n; ++r) {
    used[r] = true;
    stack = {EdgeInst::single(r)};
    dfs(dfs, r);
    used[r] = false;
  }
}

}  // namespace

ConditionYVerdict check_condition_y_bounded(const Presentation& p, std::uint64_t horizon) {
  auto report = structural_report(p);
  if (!report.has_sources) {
    ConditionYVerdict v;
    v.status = ConditionYVerdict::Status::HoldsByNoSources;
    v.note = "no vertex is a source";
    return v;
  }
  if (p.edges_finite()) return decide_condition_y(p);

  std::vector<InfinitePath> reps;
  for (std::uint32_t f = 0; f < p.edge_families().size(); ++f) {
    const auto first = p.edge_families()[f].first;
    for (std::uint64_t s = first; s < first + kTailStarts; ++s) {
      if (!family_self_chains(p, f, s)) continue;
      for (auto& pre : prefixes_into(p, EdgeInst::of_family(f, s))) {
        reps.push_back(InfinitePath::family_tail(std::move(pre), f, s));
      }
    }
  }
  std::vector<EdgePath> cycles;
  simple_cycles(p, cycles);
  for (const auto& c : cycles) {
    for (auto& pre : prefixes_into(p, c.front())) reps.push_back(InfinitePath::lasso(std::move(pre), c));
  }
  if (reps.size() > kMaxRepresentatives) reps.resize(kMaxRepresentatives);

  for (const auto& x : reps) {
    if (!is_valid_infinite_path(p, x)) continue;
    if (!condition_y_witness(p, x, 1, horizon)) {
      ConditionYVerdict v;
      v.status = ConditionYVerdict::Status::ViolationUpToHorizon;
      v.witness = x;
      v.horizon = horizon;
      v.note = "no replacement prefix for k <= horizon";
      return v;
    }
  }
  ConditionYVerdict v;
  v.status = ConditionYVerdict::Status::Unknown;
  v.horizon = horizon;
  v.note = "all " + std::to_string(reps.size()) + " explored representatives admit witnesses; not a proof";
  return v;
}

}  // namespace ultragrade
