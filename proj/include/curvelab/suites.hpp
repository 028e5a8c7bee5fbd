#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/field.hpp"

namespace curvelab {

struct SuiteResult {
  std::string name;
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> counts;  ///< check -> (passed, total)
  std::vector<std::string> failures;  ///< first failures, capped

  void record(const std::string& check, bool pass, const std::string& detail = "");
  std::int64_t failed() const;
};

struct Grid {
  int d_lo = 7, d_hi = 7;
  std::optional<int> g_lo, g_hi;  ///< default: -30 .. C(d-3, 2) - 2
};

/// Closed-form identities only: branch agreement, sum of h_b, family
/// dimension formulas, tangent space identity.
SuiteResult formula_suite(const Grid& grid);
/// Constructs every b (and the complete intersection case when admissible)
/// for each (d, g) and checks the full report.
SuiteResult paper_suite(const Grid& grid, std::uint64_t seed, Coeff p);
/// Groebner idempotence and membership on seeded ideals, dual-path Betti and
/// Riemann-Roch on a few small curves.
SuiteResult kernel_suite(int ideals, std::uint64_t seed, Coeff p);

}  // namespace curvelab
