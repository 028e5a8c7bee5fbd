#include "curvelab/classify.hpp"

#include <algorithm>
#include <functional>

#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"

namespace curvelab {

namespace {

bool rao_equals(const CurveInvariants& inv, const std::function<std::int64_t(int)>& ref) {
  for (int j = inv.table_lo(); j <= inv.table_hi(); ++j)
    if (inv.h1(j) != ref(j)) return false;
  return true;
}

// Plane H such that I : H is a planar curve of degree 2, searched among the
// linear factors of the quadrics in I and the linear common factor of I_2.
std::optional<Polynomial> plane_of_planar_subcurve(const Ideal& I) {
  const auto quadrics = I.graded_piece(2);
  if (quadrics.empty()) return std::nullopt;
  std::vector<Polynomial> candidates;
  auto add = [&](const Polynomial& l) {
    const auto m = l.monic();
    if (std::find(candidates.begin(), candidates.end(), m) == candidates.end()) candidates.push_back(m);
  };
  for (const auto& q : quadrics)
    for (const auto& l : analyze_quadric(q).linear_factors) add(l);
  if (quadrics.size() >= 2) {
    Polynomial g = quadrics.front();
    for (const auto& q : quadrics) g = polynomial_gcd(g, q);
    if (g.degree() == 1) add(g);
  }
  for (const auto& H : candidates) {
    const Ideal residual = quotient_by(I, H);
    const auto dd = dimension_degree(residual);
    if (dd.proj_dim == 1 && dd.degree == 2 && residual.dim_in_degree(1) > 0) return H;
  }
  return std::nullopt;
}

std::vector<std::int64_t> expected_section_profile(int d) {
  std::vector<std::int64_t> v{1, 2, 2};
  for (int i = 0; i < d - 5; ++i) v.push_back(1);
  v.push_back(0);
  return v;
}

}  // namespace

std::string Classification::label() const {
  if (tag == "set_b" && b) return "set_b(" + std::to_string(*b) + ")";
  return tag;
}

Classification classify(const Ideal& I, SeededRng& rng) { return classify(CurveInvariants(I), rng); }

Classification classify(const CurveInvariants& inv, SeededRng& rng) {
  const Ideal& I = inv.ideal();
  Classification c;
  c.degree = inv.degree();
  c.genus = inv.genus();
  c.h0_2 = inv.h0(2);
  c.h0_3 = inv.h0(3);
  const auto rao = inv.rao();
  c.rao_max = rao.max;
  c.rao_lo = rao.support_lo;
  c.rao_hi = rao.support_hi;
  if (c.h0_2 == 1) c.quadric = analyze_quadric(I.graded_piece(2).front());

  const int d = static_cast<int>(c.degree), g = static_cast<int>(c.genus);
  const auto n = CurveNumerics::make(d, g);
  const bool acm = rao.values.empty();
  const bool non_degenerate = inv.h0(1) == 0;

  bool plateau = false;
  if (d >= 5) {
    plateau = true;
    for (int j = 1; j <= d - 3; ++j) plateau = plateau && inv.h1(j) == n.r;
  }

  if (acm) {
    c.tag = "ACM";
  } else if (d >= 3 && n.a_ext >= 1 && rao_equals(inv, [&](int j) { return rho_extremal(n, j); })) {
    c.tag = "extremal";
  } else if (d >= 5 && rao_equals(inv, [&](int j) { return rho_subextremal(n, j); })) {
    c.tag = "subextremal";
    if (d >= 7) c.b = 0;
  } else if (d >= 7 && plateau && n.r >= 1) {
    for (int b = 0; b <= CurveNumerics::max_b(n.r) && !c.b; ++b) {
      const auto nb = CurveNumerics::make(d, g, b);
      if (rao_equals(inv, [&](int j) { return rho_b(nb, j); })) c.b = b;
    }
    if (c.b) c.tag = "set_b";
  }

  if (d < 7 || !non_degenerate) return c;

  c.plane = plane_of_planar_subcurve(I);
  c.section_diff = hyperplane_section_diff(I, rng);
  StructureConditions s;
  s.rao_plateau = plateau;
  s.quadric_cubic = c.h0_2 == 1 && c.h0_3 == 5;
  s.section_profile = c.h0_2 == 1 && c.section_diff == expected_section_profile(d);
  s.planar_residual = c.plane.has_value();
  c.structure = s;

  if (c.plane) c.residual = residual_decomposition(I, *c.plane);

  if (plateau && !acm) {
    TailConditions t;
    t.subextremal = c.tag == "subextremal";
    t.collinear = c.residual && c.residual->z.dim_in_degree(1) > 0;
    t.b_zero = c.b && *c.b == 0;
    t.tail_positive = inv.h1(d + n.r - 4) > 0;
    t.rho_at_d_r_3 = inv.h1(d + n.r - 3);
    c.tail = t;
    if (c.b && c.residual) {
      const auto hs = c.residual->z.hilbert_series();
      bool ok = true;
      for (int j = 0; j <= n.r + 1; ++j)
        ok = ok && hs.value(j) - (j ? hs.value(j - 1) : 0) == h_b(n.r, *c.b, j);
      c.b_matches_residual = ok;
    }
  }
  return c;
}

}  // namespace curvelab
