#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/ideal.hpp"
#include "curvelab/resolution.hpp"

namespace curvelab {

/// Points on the reducible conic {zt = 0} of the plane x = 0 (coordinates
/// y, z, t): b points [1:0:c] on L1 = {z = 0}, a points [1:c:0] on
/// L2 = {t = 0}, c = 1, 2, ..., plus optionally the corner [1:0:0].
struct ConicPointConfig {
  int b = 0;
  int a = 0;
  bool include_intersection_point = true;

  int r() const { return a + b + (include_intersection_point ? 1 : 0); }
};

struct PointScheme {
  Ideal ideal;             ///< saturated, in k[y,z,t]
  GradedMap hilbert_burch; ///< syzygy matrix of the minimal generators
  std::vector<int> generator_degrees;
  std::vector<std::int64_t> hilbert_diff;  ///< first difference of h_Z until it vanishes
};

/// Intersection of the point ideals, checked against the ideal of 2x2 minors
/// of [[p, z, 0], [q, 0, t]] when the corner is included.
PointScheme points_on_conic_ideal(const ConicPointConfig& cfg, const RingPtr& plane);

/// Curve ideal plus the data used to build it.
struct CurveBundle {
  std::string kind;  ///< set, set_ci, acm_double_plane, extremal, subextremal, double_link
  Ideal ideal;
  int d = 0;
  int g = 0;
  std::optional<int> b;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::map<std::string, Polynomial> witnesses;  ///< named forms (H, phi, psi, h, F, G, p, q, ...)
  std::map<std::string, Ideal> parts;           ///< named sub-ideals (point scheme, components)
  std::vector<std::string> certificates;        ///< certificates that were checked and passed
};

/// Curve of subextremal type b in the double plane x^2 = 0.
/// `complete_intersection` selects the Koszul-module case (r even, b = r/2 - 1).
CurveBundle construct_set_curve(int d, int g, int b, bool complete_intersection, SeededRng& rng,
                                Coeff p = PrimeField::kDefaultCharacteristic);

/// ACM curve (x^2, x phi, phi h + x F) of degree d in the double plane; genus C(d-3, 2) + 1.
CurveBundle construct_acm_double_plane(int d, SeededRng& rng, Coeff p = PrimeField::kDefaultCharacteristic);

/// Plane curve of degree d-1 through the line {x = t = 0} union a double
/// structure on that line; certified by rho = rho^E and h^0(I(2)) = 2.
CurveBundle construct_extremal(int d, int g, SeededRng& rng, Coeff p = PrimeField::kDefaultCharacteristic);

/// Adds a 2-secant line meeting the support line of an extremal curve;
/// certified by rho = rho^SE.
CurveBundle attach_two_secant_line(const CurveBundle& extremal, SeededRng& rng, int budget = 25);

/// construct_extremal(d - 1, g - 1) followed by attach_two_secant_line.
CurveBundle construct_subextremal(int d, int g, SeededRng& rng, Coeff p = PrimeField::kDefaultCharacteristic);

/// F * I + (q), saturated. Throws InvalidArgument if q is not in I or q and F share a factor.
Ideal basic_double_link(const Ideal& I, const Polynomial& q, const Polynomial& F);

struct ResidualData {
  Polynomial plane;        ///< the linear form H
  Ideal c_prime;           ///< I : (H)
  RingPtr plane_ring;      ///< coordinates on H
  Ideal section;           ///< saturated ideal of C cap H in the plane ring
  Polynomial f_d;          ///< equation of the planar part D in H
  Ideal z;                 ///< I_{Z,H} = section : (f_D)
  int delta = 0;           ///< deg C'
  std::int64_t g_prime = 0;
  int planar_degree = 0;   ///< deg D
  std::int64_t deg_z = 0;
  std::int64_t expected_deg_z = 0;  ///< residual_degree(d, g, delta, g')
  bool z_in_c_prime_section = false;
  bool c_prime_planar = false;      ///< h^0(I_C'(1)) > 0
};

/// Residual decomposition with respect to the plane H (a linear form).
ResidualData residual_decomposition(const Ideal& I, const Polynomial& H);

struct QuadricInfo {
  int rank = 0;
  bool reduced = false;                 ///< rank >= 2
  std::vector<Polynomial> linear_factors;  ///< empty if irreducible over F_p
};
QuadricInfo analyze_quadric(const Polynomial& q);

/// Random invertible linear change of the variables of R applied to I.
Ideal random_coordinate_change(const Ideal& I, SeededRng& rng);

}  // namespace curvelab
