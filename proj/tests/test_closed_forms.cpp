#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"
#include "doctest.h"

using namespace curvelab;

TEST_CASE("reference Rao functions at hand-evaluated points") {
  auto n = CurveNumerics::make(7, 0);
  CHECK(n.r == 7);
  CHECK(n.a_ext == 10);
  CHECK(rho_extremal(n, 3) == 10);
  CHECK(rho_extremal(n, 0) == 10);
  CHECK(rho_extremal(n, 5) == 10);
  CHECK(rho_extremal(n, 6) == 9);
  CHECK(rho_extremal(n, 14) == 1);
  CHECK(rho_extremal(n, 15) == 0);
  CHECK(rho_subextremal(n, 5) == 6);
  CHECK(rho_subextremal(n, 4) == 7);
  auto nb = CurveNumerics::make(7, 0, 2);
  CHECK(rho_b(nb, 5) == 6);
  CHECK(rho_b(nb, 6) == 4);
  CHECK(rho_b(nb, 7) == 2);
  CHECK(rho_b(nb, 8) == 1);
  CHECK(rho_b(nb, 9) == 0);
  CHECK(rho_b(nb, 0) == rho_b(nb, 5));
  CHECK_THROWS_AS(CurveNumerics::make(7, 0, 4), Error);
}

TEST_CASE("h_b profiles") {
  std::vector<std::int64_t> v;
  for (int j = -1; j <= 6; ++j) v.push_back(h_b(7, 2, j));
  CHECK(v == std::vector<std::int64_t>{0, 1, 2, 2, 1, 1, 0, 0});
  for (int j = 0; j < 9; ++j) CHECK(h_b(9, 0, j) == 1);
  CHECK(h_b(9, 0, 9) == 0);
}

TEST_CASE("expected Hilbert data") {
  auto n = CurveNumerics::make(7, 0, 2);
  CHECK(expected_hilbert(n, 2).h_c == 9);
  CHECK(expected_hilbert(n, 0).h2 == n.r + n.g - 1);
  CHECK(expected_hilbert(n, 2).h2 == 1);
  CHECK(expected_hilbert(n, 1).h2 == 3);
  CHECK(expected_hilbert(n, 3).h_c == 15);
}

TEST_CASE("expected Betti tables") {
  auto se = expected_betti(CurveNumerics::make(7, 0, 0), BettiCase::Subextremal);
  CHECK(se.degrees(0) == std::vector<int>{2, 3, 6, 12});
  CHECK(se.degrees(1) == std::vector<int>{4, 7, 13, 13});
  CHECK(se.degrees(2) == std::vector<int>{14});
  auto ci = expected_betti(CurveNumerics::make(7, 1, 2), BettiCase::SetCompleteIntersection);
  CHECK(ci.degrees(0) == std::vector<int>{2, 3, 7, 8});
  CHECK(ci.degrees(1) == std::vector<int>{4, 8, 9, 10});
  CHECK(ci.degrees(2) == std::vector<int>{11});
  CHECK_THROWS_AS(expected_betti(CurveNumerics::make(7, 0, 2), BettiCase::SetCompleteIntersection), Error);
  for (auto c : {se, ci}) CHECK(c.degrees(0).size() - c.degrees(1).size() + c.degrees(2).size() == 1);
}

TEST_CASE("residual degree") {
  CHECK(residual_degree(7, 0, 2, 0) == 7);
  CHECK(residual_degree(7, -2, 1, 0) == 12);
  CHECK_THROWS_AS(residual_degree(7, 0, 7, 0), Error);
}

TEST_CASE("family dimensions for d = 7, g = 0") {
  auto f = family_dimensions(CurveNumerics::make(7, 0));
  CHECK(f.dim_F_SE == 40);
  CHECK(f.dim_F_SET2 == 40);
  CHECK(f.dim_SE_closed == 40);
  CHECK(f.dim_extremal == 51);
  CHECK(f.dim_extremal_closed == 51);
  CHECK(f.delta_gamma == 21);
  CHECK(f.epsilon == 3);
  CHECK(f.t_gamma_rho == 40);
}

TEST_CASE("postulation character against the third difference of the Hilbert function") {
  // gamma = -d^3 h_C holds for b >= 1; for b = 0 the printed gamma is 0 at
  // j = d - 1 while the printed h_C gives 1 there.
  for (int d = 7; d <= 12; ++d)
    for (int g : {-4, -1, 0, 1}) {
      const auto base = CurveNumerics::make(d, g);
      if (base.r < 1) continue;
      for (int b = 0; b <= CurveNumerics::max_b(base.r); ++b) {
        const auto n = CurveNumerics::make(d, g, b);
        auto h = [&](int j) { return j < 0 ? 0 : expected_hilbert(n, j).h_c; };
        for (int j = 0; j <= d + n.r; ++j) {
          const auto third = h(j) - 3 * h(j - 1) + 3 * h(j - 2) - h(j - 3);
          const auto gamma = expected_hilbert(n, j).gamma;
          if (b == 0 && j == d - 1) CHECK(-third == gamma + 1);
          else CHECK(-third == gamma);
        }
      }
    }
}
