#include "ultragrade/classifier.hpp"

#include "ultragrade/error.hpp"
#include "ultragrade/lattice.hpp"

namespace ultragrade {

const char* property_name(GradingProperty p) {
  switch (p) {
    case GradingProperty::StrongZ: return "strong-z";
    case GradingProperty::EpsStrongZ: return "eps-z";
    case GradingProperty::StrongF: return "strong-f";
    case GradingProperty::EpsStrongF: return "eps-f";
    case GradingProperty::GaugeSaturated: return "gauge";
  }
  return "?";
}

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Yes: return "Yes";
    case VerdictStatus::No: return "No";
    case VerdictStatus::Undetermined: return "Undetermined";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::string vertex_or_none(const Presentation& p, const std::optional<VertexRef>& v) {
  return v ? p.vertex_label(*v) : std::string("none");
}

void require_edges(const Presentation& p) {
  if (p.edges().empty() && p.edge_families().empty()) {
    throw Error(ErrorCode::NoEdges, "the free group grading needs at least one edge");
  }
}

}  // namespace

GradingVerdict classify_strong_z(const Presentation& p, const ClassifierOptions& opt) {
  GradingVerdict v;
  v.property = GradingProperty::StrongZ;
  v.rule = "strongly Z-graded iff no sinks, row-finite and Condition (Y)";
  auto s = structural_report(p);
  auto y = check_condition_y_bounded(p, opt.horizon);
  using Y = ConditionYVerdict::Status;

  v.reasons.push_back({"no sinks", s.has_sinks ? "false: " + vertex_or_none(p, s.sink_witness) + " is a sink" : "true",
                       !s.has_sinks});
  std::string rf = "true";
  if (s.has_infinite_emitter) {
    rf = "false: " + vertex_or_none(p, s.infinite_emitter_witness) + " is an infinite emitter";
  } else if (!s.finite_range) {
    rf = "false: some edge has an infinite range";
  }
  v.reasons.push_back({"row-finite", rf, s.row_finite});
  std::string yo = status_name(y.status);
  if (y.witness) yo += ": " + infinite_path_label(p, *y.witness);
  if (!y.note.empty()) yo += " (" + y.note + ")";
  bool y_ok = y.status == Y::Holds || y.status == Y::HoldsByNoSources;
  v.reasons.push_back({"Condition (Y)", yo, y_ok});

  if (s.has_sinks || !s.row_finite || y.status == Y::Fails) {
    v.status = VerdictStatus::No;
  } else if (y_ok) {
    v.status = VerdictStatus::Yes;
  } else {
    v.status = VerdictStatus::Unknown;
    v.note = "Condition (Y) is not settled up to horizon " + std::to_string(opt.horizon);
    if (y.status == Y::ViolationUpToHorizon) v.note += "; a candidate violation persists to the horizon";
  }

  if (v.status == VerdictStatus::Yes && opt.factorization_vertices > 0 && p.vertices_finite() &&
      p.vertex_count() <= opt.factorization_vertices) {
    try {
      for (const auto& u : p.vertices()) {
        for (int n : {1, -1}) v.factorizations.push_back(strong_factorization(p, u, n, kDefaultFactorizationDepth, opt.ck2_depth));
      }
    } catch (const Error& e) {
      v.note = std::string("factorization certificate incomplete: ") + e.what();
    }
  }
  return v;
}

GradingVerdict classify_eps_strong_z(const Presentation& p, const ClassifierOptions& opt) {
  GradingVerdict v;
  v.property = GradingProperty::EpsStrongZ;
  v.rule = "necessary: finitely many edges and G^0 a generalized vertex; sufficient: additionally every source of an "
           "edge lies in some range";
  bool finite_edges = p.edges_finite();
  v.reasons.push_back({"finitely many edges", finite_edges ? "true" : "false: an edge family is present", finite_edges});
  bool unital = is_unital(p);
  v.reasons.push_back({"G^0 is a generalized vertex", unital ? "true" : "false", unital});
  if (!finite_edges || !unital) {
    v.status = VerdictStatus::No;
    return v;
  }
  VertexSet covered = covered_vertices(p);
  std::optional<EdgeInst> bad;
  for (const auto& e : p.all_edges()) {
    if (!covered.contains(p.source(e))) {
      bad = e;
      break;
    }
  }
  v.reasons.push_back({"every edge source lies in a range",
                       bad ? "false: s(" + p.edge_label(*bad) + ") = " + p.vertex_label(p.source(*bad)) + " lies in no range"
                           : "true",
                       !bad});
  try {
    auto cert = find_epsilon_certificate(p, 2, opt.ck2_depth);
    if (!bad) {
      v.status = VerdictStatus::Yes;
      if (cert.found) v.epsilon = std::move(cert);
      return v;
    }
    v.reasons.push_back({"local unit certificate", cert.found ? "found: " + cert.note : "not found: " + cert.note,
                         cert.found});
    v.status = cert.found ? VerdictStatus::Yes : VerdictStatus::Undetermined;
    if (cert.found) v.epsilon = std::move(cert);
  } catch (const Error& e) {
    if (bad) {
      v.status = VerdictStatus::Undetermined;
      v.reasons.push_back({"local unit certificate", std::string("search aborted: ") + e.what(), false});
    } else {
      v.status = VerdictStatus::Yes;
      v.note = std::string("certificate search aborted: ") + e.what();
    }
  }
  return v;
}

GradingVerdict classify_strong_f(const Presentation& p) {
  require_edges(p);
  GradingVerdict v;
  v.property = GradingProperty::StrongF;
  v.rule = "strongly graded by the free group iff exactly one edge e, with r(e) = {s(e)}";
  bool one = p.edge_families().empty() && p.edges().size() == 1;
  v.reasons.push_back({"exactly one edge", one ? "true" : "false: " + std::string(p.edge_families().empty()
                                                                                    ? std::to_string(p.edges().size()) + " edges"
                                                                                    : "infinitely many edges"),
                       one});
  if (!one) {
    v.status = VerdictStatus::No;
    return v;
  }
  const auto& e = p.edges().front();
  bool loop = e.range == p.singleton(e.source);
  v.reasons.push_back({"r(e) = {s(e)}", loop ? "true" : "false: r(" + e.id + ") = {" + p.set_label(e.range) + "}", loop});
  v.status = loop ? VerdictStatus::Yes : VerdictStatus::No;
  return v;
}

GradingVerdict classify_eps_strong_f(const Presentation& p) {
  require_edges(p);
  GradingVerdict v;
  v.property = GradingProperty::EpsStrongF;
  v.rule = "epsilon-strongly graded by the free group iff unital iff G^0 is a generalized vertex";
  bool unital = is_unital(p);
  v.reasons.push_back({"G^0 is a generalized vertex", unital ? "true" : "false", unital});
  v.status = unital ? VerdictStatus::Yes : VerdictStatus::No;
  return v;
}

GradingVerdict gauge_saturation(const Presentation& p, const ClassifierOptions& opt) {
  ClassifierOptions o = opt;
  o.factorization_vertices = 0;
  GradingVerdict v = classify_strong_z(p, o);
  v.property = GradingProperty::GaugeSaturated;
  v.rule = "gauge action saturated iff the algebra is strongly Z-graded";
  return v;
}

}  // namespace ultragrade
