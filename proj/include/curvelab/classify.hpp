#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/factory.hpp"
#include "curvelab/invariants.hpp"

namespace curvelab {

/// The four equivalent descriptions of a curve of subextremal type (d >= 7),
/// each computed independently.
struct StructureConditions {
  bool rao_plateau = false;         ///< rho(j) = r on [1, d-3]
  bool quadric_cubic = false;       ///< h0(I(2)) = 1 and h0(I(3)) = 5
  bool section_profile = false;     ///< unique quadric and d h_Gamma = 1 2 2 1 ... 1 0
  bool planar_residual = false;     ///< planar subcurve of degree d-2 with planar conic residual
  bool all_equal() const {
    return rao_plateau == quadric_cubic && quadric_cubic == section_profile && section_profile == planar_residual;
  }
};

/// Conditions characterizing b = 0 for a non-ACM curve of subextremal type.
struct TailConditions {
  bool subextremal = false;     ///< rho = rho^SE
  bool collinear = false;       ///< h0(I_{Z,H}(1)) > 0
  bool b_zero = false;          ///< from the fitted rho_b
  bool tail_positive = false;   ///< rho(d + r - 4) > 0
  std::int64_t rho_at_d_r_3 = 0;  ///< rho(d + r - 3), reported for reference
  bool all_equal() const {
    return subextremal == collinear && collinear == b_zero && b_zero == tail_positive;
  }
};

struct Classification {
  std::string tag = "other";  ///< ACM, extremal, subextremal, set_b, other
  std::optional<int> b;
  std::int64_t degree = 0, genus = 0;
  std::int64_t h0_2 = 0, h0_3 = 0;
  std::int64_t rao_max = 0;
  int rao_lo = 0, rao_hi = -1;
  std::optional<QuadricInfo> quadric;  ///< when h0(I(2)) = 1
  std::vector<std::int64_t> section_diff;
  std::optional<Polynomial> plane;     ///< plane of the planar subcurve of degree d-2
  std::optional<ResidualData> residual;
  std::optional<StructureConditions> structure;  ///< d >= 7
  std::optional<TailConditions> tail;            ///< subextremal type, not ACM
  std::optional<bool> b_matches_residual;        ///< d h_Z = h_b

  /// "set_b(2)" style label.
  std::string label() const;
};

Classification classify(const CurveInvariants& inv, SeededRng& rng);
Classification classify(const Ideal& I, SeededRng& rng);

}  // namespace curvelab
