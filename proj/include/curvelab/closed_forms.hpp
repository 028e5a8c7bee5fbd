#pragma once

#include <cstdint>
#include <optional>

#include "curvelab/resolution.hpp"

namespace curvelab {

/// Numerical data of a curve of degree d and genus g.
struct CurveNumerics {
  int d = 0;
  int g = 0;
  int r = 0;      ///< C(d-3, 2) - g + 1
  int a_ext = 0;  ///< C(d-2, 2) - g
  std::optional<int> b;
  int a = 0;      ///< r - b - 1 when b is set

  /// Throws InvalidArgument if b is given and not in [0, floor((r-1)/2)].
  static CurveNumerics make(int d, int g, std::optional<int> b = std::nullopt);
  static int max_b(int r) { return r >= 1 ? (r - 1) / 2 : -1; }
  /// r even and b = r/2 - 1: the point scheme may be a complete intersection.
  bool ci_admissible() const { return b && r % 2 == 0 && *b == r / 2 - 1; }
};

enum class RaoKind { Extremal, Subextremal, SetB };

/// Reference Rao functions. Every branch containing j is evaluated and the
/// values must agree (InternalInconsistency otherwise).
std::int64_t rho_extremal(const CurveNumerics& n, int j);
std::int64_t rho_subextremal(const CurveNumerics& n, int j);
std::int64_t rho_b(const CurveNumerics& n, int j);
std::int64_t reference_rao(RaoKind kind, const CurveNumerics& n, int j);

/// First difference of the Hilbert function of the point scheme Z.
std::int64_t h_b(int r, int b, int j);

struct ExpectedHilbert {
  std::int64_t h_c;
  std::int64_t h2;
  std::int64_t gamma;
};
/// Hilbert function, h^2(I_C(j)) and postulation character of a curve of
/// subextremal type b, all determined by rho_b.
ExpectedHilbert expected_hilbert(const CurveNumerics& n, int j);

enum class BettiCase { Subextremal, SetCompleteIntersection, SetGeneral };
/// Betti numbers of I_C (index 0 = generators).
BettiTable expected_betti(const CurveNumerics& n, BettiCase c);

/// deg Z = C(d - delta - 1, 2) - g + g' + delta - 1. Throws for delta >= d.
std::int64_t residual_degree(int d, int g, int delta, int g_prime);

struct FamilyDimensions {
  std::int64_t dim_extremal = 0;         ///< 2 a + 4 + (d-1)(d+2)/2
  std::int64_t dim_extremal_closed = 0;  ///< (3/2) d (d-3) + 9 - 2g
  std::int64_t dim_F_SE = 0;             ///< 2 r + 6 + (d-2)(d+1)/2
  std::int64_t dim_F_SET2 = 0;           ///< same expression, double-plane family
  std::int64_t dim_SE_closed = 0;        ///< (3/2) d (d-5) + 19 - 2g
  std::int64_t dim_in_fixed_double_plane = 0;  ///< 2 r + 3 + (d-2)(d+1)/2
  std::int64_t dim_SET0_double_planes = 0;     ///< 2 r + 5 + (d-2)(d+1)/2
  std::int64_t delta_gamma = 0;          ///< (d-2)(d+1)/2 + 8 - r
  std::int64_t epsilon = 0;              ///< r - 4
  std::int64_t hom_MM = 1;
  std::int64_t ext1_MM = 0;              ///< 2 r + 3
  std::int64_t t_gamma_rho = 0;          ///< delta + epsilon - hom + ext1
  /// Codimension in F_SET2 of the type-b stratum for b = 0..floor((r-1)/2).
  std::vector<int> stratum_codims;
};
/// Requires d >= 7 and r >= 3.
FamilyDimensions family_dimensions(const CurveNumerics& n);

}  // namespace curvelab
