#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ultragrade/ultragrade.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

struct Presentation {
  ug_presentation* p = nullptr;
  ~Presentation() { ug_presentation_free(p); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { ug_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

bool use_color() {
  const char* env = std::getenv("ULTRAGRADE_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return isatty(fileno(stdout)) != 0;
}

int report_error(ug_status s) {
  std::cerr << "ultragrade: " << ug_status_name(s);
  if (int line = ug_last_error_line()) std::cerr << " (line " << line << ")";
  std::cerr << ": " << ug_last_error() << "\n";
  return kExitInput;
}

int emit(const std::string& json, const std::string& format) {
  if (format == "json") {
    std::cout << nlohmann::json::parse(json).dump(2) << "\n";
    return kExitOk;
  }
  OwnedString text;
  if (ug_status s = ug_render_text(json.c_str(), use_color() ? 1 : 0, &text.s)) return report_error(s);
  std::cout << text.str();
  return kExitOk;
}

bool has_no(const nlohmann::json& doc) {
  if (doc["kind"] == "check") return doc["status"] == "No" || doc["status"] == "Fails";
  for (const char* key : {"strong_z", "eps_strong_z", "strong_f", "eps_strong_f", "gauge_saturated"}) {
    if (doc[key] == "No") return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grading properties of ultragraph Leavitt path algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ug_version()));

  std::string file;
  std::string format = "text";
  std::uint64_t horizon = 40;
  unsigned ck2_depth = 3;
  bool assert_flag = false;
  std::string property;
  std::string expr;
  unsigned verify_iso = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--horizon", horizon, "Search horizon for Condition (Y) on infinite presentations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--ck2-depth", ck2_depth, "Extra expansion levels for equality checks")->check(CLI::Range(0u, 16u));
    sub->add_flag("--assert", assert_flag, "Exit with status 1 when a verdict is No");
  };

  auto* analyze = app.add_subcommand("analyze", "Report all verdicts with certificates");
  analyze->add_option("FILE", file, "Presentation file")->required();
  add_common(analyze);
  add_analysis(analyze);

  auto* check = app.add_subcommand("check", "Report one property");
  check->add_option("PROPERTY", property, "Property")
      ->required()
      ->check(CLI::IsMember({"strong-z", "eps-z", "strong-f", "eps-f", "gauge", "cond-y", "row-finite", "unital"}));
  check->add_option("FILE", file, "Presentation file")->required();
  add_common(check);
  add_analysis(check);

  auto* graph = app.add_subcommand("graph", "Print the associated directed graph");
  graph->add_option("FILE", file, "Presentation file")->required();

  auto* eval = app.add_subcommand("eval", "Normal form and degrees of an algebra expression");
  eval->add_option("FILE", file, "Presentation file")->required();
  eval->add_option("EXPR", expr, "Expression, e.g. 's(e)*st(e) + p{u}'")->required();
  add_common(eval);

  auto* skew = app.add_subcommand("skew", "Image of an expression in the partial skew group ring");
  skew->add_option("FILE", file, "Presentation file")->required();
  skew->add_option("EXPR", expr, "Expression")->required();
  skew->add_option("--verify-iso", verify_iso, "Check the generator relations at this atom depth")
      ->check(CLI::Range(1u, 8u));
  add_common(skew);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Presentation pres;
  if (ug_status s = ug_presentation_load(file.c_str(), &pres.p)) return report_error(s);

  OwnedString out;
  ug_status s = UG_OK;
  if (*graph) {
    s = ug_associated_graph(pres.p, &out.s);
    if (s) return report_error(s);
    std::cout << out.str();
    return kExitOk;
  }
  if (*analyze) s = ug_analyze(pres.p, horizon, ck2_depth, &out.s);
  if (*check) s = ug_check(pres.p, property.c_str(), horizon, ck2_depth, &out.s);
  if (*eval) s = ug_eval(pres.p, expr.c_str(), &out.s);
  if (*skew) s = ug_skew(pres.p, expr.c_str(), verify_iso, &out.s);
  if (s) return report_error(s);

  int rc = emit(out.str(), format);
  if (rc == kExitOk && assert_flag && has_no(nlohmann::json::parse(out.str()))) rc = kExitAssert;
  return rc;
}
