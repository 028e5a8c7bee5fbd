#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/classify.hpp"
#include "curvelab/factory.hpp"
#include "curvelab/invariants.hpp"
#include "json.hpp"

namespace curvelab {

inline constexpr int kReportSchemaVersion = 1;

/// One generator per line, variables x, y, z, t, integer coefficients,
/// `^` powers, optional `*`, `#` comments. Parse errors name line and column.
Ideal read_ideal_text(const std::string& text, const RingPtr& ring);
std::string write_ideal_text(const Ideal& I, const std::string& header = "");

/// Coefficients in the symmetric range (-p/2, p/2].
std::string signed_string(const Polynomial& f);

struct ReportInput {
  std::string source;  ///< construct, analyze
  std::optional<std::string> kind;
  std::optional<int> d, g, b;
  bool ci = false;
  std::uint64_t seed = 0;
  std::uint64_t characteristic = 0;
  std::vector<std::string> certificates;
  std::vector<std::string> notices;
};

struct Check {
  std::string name;
  bool pass = false;
};

struct Report {
  nlohmann::ordered_json doc;
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Full invariant report: engine values as "computed", closed forms as
/// "expected" (when the classification has one), exact integer diffs.
Report build_report(const CurveInvariants& inv, const Classification& cls, const ReportInput& input);

}  // namespace curvelab
