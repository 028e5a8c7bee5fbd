#include "curvelab/error.hpp"
#include "curvelab/invariants.hpp"
#include "doctest.h"

using namespace curvelab;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }
Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(P(r, g));
  return Ideal(r, v);
}

// dim Ext^3(R/I, R)_e by dense ranks: coker of the transposed last map.
std::int64_t dense_ext3(const Resolution& res, int e) {
  if (res.length() < 3) return 0;
  const auto pr = graded_piece_rank(res.maps[2].transpose(), e);
  return static_cast<std::int64_t>(pr.target_dim - pr.rank);
}

}  // namespace

TEST_CASE("a line") {
  auto R = space_ring();
  CurveInvariants ci(I(R, {"x", "y"}));
  CHECK(ci.degree() == 1);
  CHECK(ci.genus() == 0);
  auto b = ci.betti_table();
  CHECK(b.get(0, 1) == 2);
  CHECK(b.get(1, 2) == 1);
  CHECK(b.entries().size() == 2);
  for (int j = -5; j <= 5; ++j) CHECK(ci.h1(j) == 0);
  CHECK(ci.cohomology_table().riemann_roch_holds(1, 0));
  SeededRng rng(3);
  CHECK(hyperplane_section_diff(I(R, {"x", "y"}), rng) == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("twisted cubic cohomology") {
  auto R = space_ring();
  CurveInvariants ci(I(R, {"x*z - y^2", "x*t - y*z", "y*t - z^2"}));
  CHECK(ci.degree() == 3);
  CHECK(ci.genus() == 0);
  for (int j = -6; j <= 6; ++j) {
    CHECK(ci.h1(j) == 0);
    CHECK(ci.h2(j) == std::max(0, -3 * j - 1));
  }
  CHECK(ci.cohomology_table().riemann_roch_holds(3, 0));
  CHECK(ci.betti_table().get(0, 2) == 3);
  SeededRng rng(5);
  CHECK(hyperplane_section_diff(ci.ideal(), rng) == std::vector<std::int64_t>{1, 2, 0});
}

TEST_CASE("two skew lines") {
  auto R = space_ring();
  auto J = intersect(I(R, {"x", "y"}), I(R, {"z", "t"}));
  CurveInvariants ci(J);
  CHECK(ci.genus() == -1);
  for (int j = -5; j <= 5; ++j) {
    CHECK(ci.h1(j) == (j == 0 ? 1 : 0));
    CHECK(ci.h1(j) == dense_ext3(ci.resolution(), -j - 4));
    CHECK(ci.h2(j) == 2 * std::max(0, -j - 1));
  }
  CHECK(ci.cohomology_table().riemann_roch_holds(2, -1));
  auto rao = ci.rao();
  CHECK(rao.max == 1);
  CHECK(rao.support_lo == 0);
  CHECK(rao.support_hi == 0);
  auto b = ci.betti_table();
  CHECK(b.get(0, 2) == 4);
  CHECK(b.get(1, 3) == 4);
  CHECK(b.get(2, 4) == 1);
}

TEST_CASE("double line of genus -2") {
  auto R = space_ring();
  CurveInvariants ci(I(R, {"x^2", "x*y", "y^2", "x*z^2 - y*t^2"}));
  CHECK(ci.degree() == 2);
  CHECK(ci.genus() == -2);
  auto t = ci.cohomology_table();
  CHECK(t.riemann_roch_holds(2, -2));
  for (const auto& row : t.rows) CHECK(row.h1 == dense_ext3(ci.resolution(), -row.j - 4));
  // Rao function symmetric about (d - 2) / 2 = 0 for a double line
  for (int j = 0; j <= 4; ++j) CHECK(ci.h1(j) == ci.h1(-j));
  CHECK_NOTHROW(ci.betti_table());
  auto nc = ci.numerical_characters();
  for (int j = t.lo + 1; j <= t.hi; ++j)
    CHECK(nc.sigma.at(j) == nc.spectrum.at(j) - nc.spectrum.at(j - 1));
}

TEST_CASE("non-saturated and non-curve input is rejected") {
  auto R = space_ring();
  CHECK_THROWS_AS(CurveInvariants(I(R, {"x", "y", "z"})), Error);
  CHECK_THROWS_AS(CurveInvariants(I(R, {"x^2", "x*y", "x*z", "x*t", "y"})), Error);
}
