#include "ultragrade/report.hpp"

#include <sstream>

#include "ultragrade/error.hpp"
#include "ultragrade/expression.hpp"
#include "ultragrade/lattice.hpp"

namespace ultragrade {

using nlohmann::json;

namespace {

json vertex_or_null(const Presentation& p, const std::optional<VertexRef>& v) {
  return v ? json(p.vertex_label(*v)) : json(nullptr);
}

json set_json(const Presentation& p, const VertexSet& s) { return s.is_empty() ? json("") : json(p.set_label(s)); }

GradingVerdict undefined_verdict(GradingProperty prop, const Error& e) {
  GradingVerdict v;
  v.property = prop;
  v.status = VerdictStatus::Unknown;
  v.rule = "grading needs at least one edge";
  v.note = e.what();
  return v;
}

}  // namespace

json structure_json(const Presentation& p, const StructuralReport& s) {
  return {
      {"vertices_finite", p.vertices_finite()},
      {"edges_finite", p.edges_finite()},
      {"has_sinks", s.has_sinks},
      {"sink_witness", vertex_or_null(p, s.sink_witness)},
      {"sinks", set_json(p, s.sinks)},
      {"has_sources", s.has_sources},
      {"source_witness", vertex_or_null(p, s.source_witness)},
      {"sources", set_json(p, s.sources)},
      {"has_infinite_emitter", s.has_infinite_emitter},
      {"infinite_emitter_witness", vertex_or_null(p, s.infinite_emitter_witness)},
      {"finite_range", s.finite_range},
      {"row_finite", s.row_finite},
  };
}

json condition_y_json(const Presentation& p, const ConditionYVerdict& y) {
  return {
      {"status", status_name(y.status)},
      {"witness", y.witness ? json(infinite_path_label(p, *y.witness)) : json(nullptr)},
      {"horizon", y.horizon},
      {"note", y.note},
  };
}

json factorization_json(const Presentation& p, const Factorization& f) {
  json pairs = json::array();
  for (const auto& [a, b] : f.pairs) pairs.push_back({a.to_string(), b.to_string()});
  return {{"target", p.vertex_label(f.target)}, {"degree", f.n}, {"verified", f.verified}, {"pairs", pairs}};
}

json verdict_json(const Presentation& p, const GradingVerdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons) {
    reasons.push_back({{"predicate", r.predicate}, {"outcome", r.outcome}, {"supports", r.supports}});
  }
  json out = {
      {"property", property_name(v.property)},
      {"status", verdict_status_name(v.status)},
      {"rule", v.rule},
      {"reasons", reasons},
      {"note", v.note},
      {"certificate", nullptr},
  };
  if (!v.factorizations.empty()) {
    json fs = json::array();
    for (const auto& f : v.factorizations) fs.push_back(factorization_json(p, f));
    out["certificate"] = {{"kind", "strong-factorization"}, {"factorizations", fs}};
  } else if (v.epsilon && v.epsilon->found) {
    json units = json::array();
    for (const auto& [n, e] : v.epsilon->units) units.push_back({{"degree", n}, {"unit", e.to_string()}});
    out["certificate"] = {{"kind", "epsilon-units"}, {"units", units}, {"note", v.epsilon->note}};
  }
  return out;
}

json analyze_json(const Presentation& p, const AnalyzeOptions& opt) {
  ClassifierOptions co;
  co.horizon = opt.horizon;
  co.ck2_depth = opt.ck2_depth;
  auto s = structural_report(p);
  auto y = check_condition_y_bounded(p, opt.horizon);
  bool unital = is_unital(p);

  GradingVerdict sz = classify_strong_z(p, co);
  GradingVerdict ez = classify_eps_strong_z(p, co);
  GradingVerdict gs = gauge_saturation(p, co);
  GradingVerdict sf, ef;
  try {
    sf = classify_strong_f(p);
    ef = classify_eps_strong_f(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoEdges) throw;
    sf = undefined_verdict(GradingProperty::StrongF, e);
    ef = undefined_verdict(GradingProperty::EpsStrongF, e);
  }

  return {
      {"kind", "analyze"},
      {"schema_version", kReportSchemaVersion},
      {"tool_version", kToolVersion},
      {"ultragraph", p.name()},
      {"parameters", {{"horizon", opt.horizon}, {"ck2_depth", opt.ck2_depth}}},
      {"coefficients", "any unital commutative ring; symbolic computations over Q"},
      {"structure", structure_json(p, s)},
      {"unital", unital},
      {"condition_y", condition_y_json(p, y)},
      {"strong_z", verdict_status_name(sz.status)},
      {"eps_strong_z", verdict_status_name(ez.status)},
      {"strong_f", verdict_status_name(sf.status)},
      {"eps_strong_f", verdict_status_name(ef.status)},
      {"gauge_saturated", verdict_status_name(gs.status)},
      {"verdicts",
       {{"strong_z", verdict_json(p, sz)},
        {"eps_strong_z", verdict_json(p, ez)},
        {"strong_f", verdict_json(p, sf)},
        {"eps_strong_f", verdict_json(p, ef)},
        {"gauge_saturated", verdict_json(p, gs)}}},
  };
}

json check_json(const Presentation& p, const std::string& property, const AnalyzeOptions& opt) {
  ClassifierOptions co;
  co.horizon = opt.horizon;
  co.ck2_depth = opt.ck2_depth;
  json out = {{"kind", "check"}, {"schema_version", kReportSchemaVersion}, {"ultragraph", p.name()},
              {"property", property}};
  auto yes_no = [](bool b) { return b ? "Yes" : "No"; };
  if (property == "strong-z" || property == "eps-z" || property == "strong-f" || property == "eps-f" ||
      property == "gauge") {
    GradingVerdict v;
    if (property == "strong-z") v = classify_strong_z(p, co);
    if (property == "eps-z") v = classify_eps_strong_z(p, co);
    if (property == "strong-f") v = classify_strong_f(p);
    if (property == "eps-f") v = classify_eps_strong_f(p);
    if (property == "gauge") v = gauge_saturation(p, co);
    out["status"] = verdict_status_name(v.status);
    out["detail"] = verdict_json(p, v);
  } else if (property == "cond-y") {
    auto y = check_condition_y_bounded(p, opt.horizon);
    out["status"] = status_name(y.status);
    out["detail"] = condition_y_json(p, y);
  } else if (property == "row-finite") {
    auto s = structural_report(p);
    out["status"] = yes_no(s.row_finite);
    out["detail"] = structure_json(p, s);
  } else if (property == "unital") {
    auto m = g0_contains(p, p.universe());
    out["status"] = yes_no(m.member);
    json w = nullptr;
    if (m.witness) {
      json inter = json::array();
      for (const auto& edges : m.witness->intersections) {
        json ids = json::array();
        for (auto i : edges) ids.push_back(p.edges()[i].id);
        inter.push_back(ids);
      }
      json fin = json::array();
      for (const auto& v : m.witness->finite_part) fin.push_back(p.vertex_label(v));
      w = {{"intersections", inter}, {"finite_part", fin}};
    }
    out["detail"] = {{"witness", w}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown property '" + property + "'");
  }
  return out;
}

json eval_json(const Presentation& p, const std::string& expr) {
  AlgebraElement x = parse_expression(p, expr);
  json out = {{"kind", "eval"}, {"ultragraph", p.name()}, {"input", expr}, {"normal_form", x.to_string()},
              {"terms", x.size()}};
  try {
    out["z_degree"] = z_degree(x);
  } catch (const Error&) {
    out["z_degree"] = nullptr;
  }
  try {
    out["f_degree"] = f_degree(x).to_string(p);
  } catch (const Error&) {
    out["f_degree"] = nullptr;
  }
  json comps = json::array();
  for (const auto& [k, c] : x.terms()) {
    AlgebraElement m = AlgebraElement::zero(p);
    m.add_term(k, c);
    comps.push_back({{"monomial", m.to_string()},
                     {"z_degree", static_cast<std::int64_t>(k.alpha.size()) - static_cast<std::int64_t>(k.beta.size())},
                     {"f_degree", FreeGroupWord::quotient(k.alpha, k.beta).to_string(p)}});
  }
  out["monomials"] = comps;
  return out;
}

json skew_json(const Presentation& p, const std::string& expr, std::size_t verify_depth) {
  AlgebraElement x = parse_expression(p, expr);
  PartialAction pa(p);
  SkewElement img = pa.phi(x);
  json comps = json::array();
  for (const auto& [t, f] : img.components) comps.push_back({{"grade", t.to_string(p)}, {"function", pa.d_to_string(f)}});
  json out = {{"kind", "skew"}, {"ultragraph", p.name()}, {"input", expr}, {"normal_form", x.to_string()},
              {"components", comps}, {"relations", nullptr}};
  if (verify_depth > 0) {
    json rel = json::array();
    for (const auto& c : pa.verify_generator_relations(verify_depth)) {
      rel.push_back({{"relation", c.relation}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out["relations"] = {{"depth", verify_depth}, {"checks", rel}};
  }
  return out;
}

namespace {

std::string paint(const std::string& s, bool color) {
  if (!color) return s;
  const char* code = "33";
  if (s == "Yes" || s == "Holds" || s == "HoldsByNoSources" || s == "pass") code = "32";
  if (s == "No" || s == "Fails" || s == "fail") code = "31";
  return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

std::string str(const json& j) { return j.is_null() ? std::string("-") : j.is_string() ? j.get<std::string>() : j.dump(); }

void render_verdict(std::ostream& os, const json& v, bool color) {
  os << "  " << str(v["property"]) << ": " << paint(str(v["status"]), color) << "\n";
  os << "    rule: " << str(v["rule"]) << "\n";
  for (const auto& r : v["reasons"]) os << "    - " << str(r["predicate"]) << ": " << str(r["outcome"]) << "\n";
  if (!str(v["note"]).empty()) os << "    note: " << str(v["note"]) << "\n";
  const json& c = v["certificate"];
  if (c.is_null()) return;
  if (c["kind"] == "strong-factorization") {
    for (const auto& f : c["factorizations"]) {
      os << "    p_" << str(f["target"]) << " in T_" << f["degree"].get<int>() << " T_" << -f["degree"].get<int>()
         << (f["verified"].get<bool>() ? " (verified)" : " (NOT verified)") << ":";
      for (const auto& pr : f["pairs"]) os << " (" << str(pr[0]) << ")(" << str(pr[1]) << ")";
      os << "\n";
    }
  } else {
    for (const auto& u : c["units"]) os << "    eps_" << u["degree"].get<std::int64_t>() << " = " << str(u["unit"]) << "\n";
    os << "    " << str(c["note"]) << "\n";
  }
}

}  // namespace

std::string render_text(const json& doc, bool color) {
  std::ostringstream os;
  const std::string kind = doc.value("kind", "");
  if (kind == "analyze") {
    const auto& s = doc["structure"];
    os << "ultragraph " << str(doc["ultragraph"]) << " (ultragrade " << str(doc["tool_version"]) << ", horizon "
       << doc["parameters"]["horizon"] << ", ck2 depth " << doc["parameters"]["ck2_depth"] << ")\n";
    os << "structure\n";
    os << "  sinks: " << (s["has_sinks"].get<bool>() ? "yes, e.g. " + str(s["sink_witness"]) : "none") << "\n";
    os << "  sources: " << (s["has_sources"].get<bool>() ? "yes, e.g. " + str(s["source_witness"]) : "none") << "\n";
    os << "  infinite emitters: "
       << (s["has_infinite_emitter"].get<bool>() ? "yes, e.g. " + str(s["infinite_emitter_witness"]) : "none") << "\n";
    os << "  row-finite: " << (s["row_finite"].get<bool>() ? "yes" : "no") << "\n";
    os << "  unital: " << (doc["unital"].get<bool>() ? "yes" : "no") << "\n";
    const auto& y = doc["condition_y"];
    os << "condition (Y): " << paint(str(y["status"]), color);
    if (!y["witness"].is_null()) os << ", path " << str(y["witness"]);
    if (!str(y["note"]).empty()) os << " (" << str(y["note"]) << ")";
    os << "\nverdicts\n";
    for (const char* key : {"strong_z", "eps_strong_z", "strong_f", "eps_strong_f", "gauge_saturated"}) {
      render_verdict(os, doc["verdicts"][key], color);
    }
  } else if (kind == "check") {
    const auto& d = doc["detail"];
    if (d.contains("property")) {
      render_verdict(os, d, color);
      return os.str();
    }
    os << str(doc["property"]) << ": " << paint(str(doc["status"]), color) << "\n";
    if (d.contains("witness") && !d["witness"].is_null()) {
      os << "  witness: " << (d["witness"].is_string() ? str(d["witness"]) : d["witness"].dump()) << "\n";
    }
    if (d.contains("note") && d["note"].is_string() && !str(d["note"]).empty() && !d.contains("property")) {
      os << "  note: " << str(d["note"]) << "\n";
    }
  } else if (kind == "eval") {
    os << str(doc["normal_form"]) << "\n";
    os << "  z-degree: " << (doc["z_degree"].is_null() ? "not homogeneous" : doc["z_degree"].dump()) << "\n";
    os << "  f-degree: " << (doc["f_degree"].is_null() ? "not homogeneous" : str(doc["f_degree"])) << "\n";
  } else if (kind == "skew") {
    os << "phi(" << str(doc["normal_form"]) << ")\n";
    for (const auto& c : doc["components"]) os << "  delta[" << str(c["grade"]) << "]: " << str(c["function"]) << "\n";
    if (!doc["relations"].is_null()) {
      os << "relations at depth " << doc["relations"]["depth"] << "\n";
      for (const auto& r : doc["relations"]["checks"]) {
        os << "  " << str(r["relation"]) << ": " << paint(r["pass"].get<bool>() ? "pass" : "fail", color) << " ("
           << str(r["detail"]) << ")\n";
      }
    }
  } else {
    os << doc.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace ultragrade
