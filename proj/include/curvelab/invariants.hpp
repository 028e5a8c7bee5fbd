#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "curvelab/hilbert.hpp"
#include "curvelab/ideal.hpp"
#include "curvelab/resolution.hpp"

namespace curvelab {

/// Integer sequence indexed by degree; absent degrees read as zero.
using DegreeTable = std::map<int, std::int64_t>;

/// Backward difference d(j) = f(j) - f(j-1) of a table on [lo, hi].
DegreeTable difference(const DegreeTable& f, int lo, int hi);

struct HilbertData {
  int cap = 0;
  std::vector<std::int64_t> values;  ///< h(j) for 0 <= j <= cap
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  int stabilization = 0;             ///< h(j) = dj + 1 - g for all j >= stabilization
  std::int64_t at(int j) const { return j < 0 || j > cap ? 0 : values[j]; }
};

struct CohomologyRow {
  int j;
  std::int64_t h0, h1, h2;
};

struct CohomologyTable {
  int lo = 0, hi = -1;
  std::vector<CohomologyRow> rows;
  const CohomologyRow& at(int j) const { return rows.at(j - lo); }
  /// h0 - h1 + (dj - g + 1 + h2) == C(j+3, 3) at every tabulated j >= -3.
  bool riemann_roch_holds(std::int64_t d, std::int64_t g) const;
};

struct RaoProfile {
  DegreeTable values;  ///< nonzero values only
  int support_lo = 0, support_hi = -1;
  std::int64_t max = 0;
  std::int64_t at(int j) const {
    auto it = values.find(j);
    return it == values.end() ? 0 : it->second;
  }
};

struct NumericalCharacters {
  DegreeTable gamma;     ///< postulation character -d^3 h_C
  DegreeTable h0_oc;     ///< h^0(O_C(j))
  DegreeTable spectrum;  ///< d^2 h^0(O_C)
  DegreeTable sigma;     ///< d spectrum
  int speciality_index = 0;
};

/// Everything computed from a saturated curve ideal in k[x,y,z,t]. The minimal
/// resolution and the dual Ext series are computed once on construction.
class CurveInvariants {
 public:
  /// Throws NotACurve if V(I) is not a curve and InvalidArgument if I is not
  /// saturated (projective dimension of R/I above 3).
  explicit CurveInvariants(const Ideal& I);

  const Ideal& ideal() const noexcept { return ideal_; }
  std::int64_t degree() const noexcept { return degree_; }
  std::int64_t genus() const noexcept { return genus_; }
  const Resolution& resolution() const noexcept { return res_; }

  /// Default table range [-(d + r), 2(d + r)] with r the maximal Rao value
  /// (at least d when the curve is ACM).
  int table_lo() const noexcept { return lo_; }
  int table_hi() const noexcept { return hi_; }

  std::int64_t hilbert(int j) const { return j < 0 ? 0 : hs_.value(j); }
  std::int64_t h0(int j) const { return ideal_.dim_in_degree(j); }
  std::int64_t h1(int j) const;
  std::int64_t h2(int j) const;

  /// Betti numbers of I: index 0 holds the generators. Verified against the
  /// Koszul homology of a general hyperplane reduction; a disagreement throws
  /// InternalInconsistency.
  BettiTable betti_table() const;
  /// Betti numbers of I from the resolution only.
  BettiTable resolution_betti() const;

  HilbertData hilbert_data(int cap) const;
  CohomologyTable cohomology_table(int lo, int hi) const;
  CohomologyTable cohomology_table() const { return cohomology_table(lo_, hi_); }
  RaoProfile rao() const;
  NumericalCharacters numerical_characters() const;

 private:
  Ideal ideal_;
  std::int64_t degree_ = 0, genus_ = 0;
  Resolution res_;
  HilbertSeries hs_{4, {}};
  std::vector<int> f3_dual_degrees_;
  std::optional<HilbertSeries> ext3_;   ///< coker of the transpose of F3 -> F2
  std::optional<HilbertSeries> coker2_; ///< coker of the transpose of F2 -> F1
  int lo_ = 0, hi_ = 0;
};

/// Betti numbers of I computed as Tor of R/(I, l) over k[y,z,t] for a random
/// linear form l, via dense Koszul homology, for internal degrees <= max_degree.
/// Also checks that l is a nonzerodivisor (Hilbert function of the reduction
/// equals the first difference of h_C); throws InternalInconsistency if not.
BettiTable koszul_betti(const Ideal& I, SeededRng& rng, int max_degree);

/// First difference of the Hilbert function of a general plane section,
/// pointwise maximum over `samples` seeded planes; entries j = 0.. until the
/// first zero after the sum reaches the degree.
std::vector<std::int64_t> hyperplane_section_diff(const Ideal& I, SeededRng& rng, int samples = 5);

}  // namespace curvelab
