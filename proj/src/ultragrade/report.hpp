#pragma once

#include "json.hpp"
#include <string>

#include "ultragrade/classifier.hpp"
#include "ultragrade/partial_action.hpp"

namespace ultragrade {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  std::uint64_t horizon = kDefaultHorizon;
  unsigned ck2_depth = kDefaultCk2Depth;
};

nlohmann::json structure_json(const Presentation& p, const StructuralReport& s);
nlohmann::json condition_y_json(const Presentation& p, const ConditionYVerdict& y);
nlohmann::json verdict_json(const Presentation& p, const GradingVerdict& v);
nlohmann::json factorization_json(const Presentation& p, const Factorization& f);

/// Full report: structure, unitality, Condition (Y), the five verdicts and
/// their certificates.
nlohmann::json analyze_json(const Presentation& p, const AnalyzeOptions& opt = {});

/// One property: strong-z, eps-z, strong-f, eps-f, gauge, cond-y,
/// row-finite or unital. Throws InvalidArgument for other names.
nlohmann::json check_json(const Presentation& p, const std::string& property, const AnalyzeOptions& opt = {});

/// Normal form with degrees, as printed by `eval`.
nlohmann::json eval_json(const Presentation& p, const std::string& expr);

/// Graded components of the image of an expression in the skew group ring;
/// with depth > 0 also the generator relation checks at that depth.
nlohmann::json skew_json(const Presentation& p, const std::string& expr, std::size_t verify_depth);

/// Human-readable rendering of any of the JSON documents above.
std::string render_text(const nlohmann::json& doc, bool color = false);

}  // namespace ultragrade
