#include "curvelab/classify.hpp"
#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"
#include "curvelab/factory.hpp"
#include "curvelab/invariants.hpp"
#include "doctest.h"

using namespace curvelab;

namespace {

bool rao_is(const CurveInvariants& inv, RaoKind kind, const CurveNumerics& n) {
  for (int j = inv.table_lo(); j <= inv.table_hi(); ++j)
    if (inv.h1(j) != reference_rao(kind, n, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("points on the conic") {
  auto S = plane_ring();
  auto ps = points_on_conic_ideal({2, 3, true}, S);
  CHECK(ps.generator_degrees == std::vector<int>{2, 3, 4});
  CHECK(ps.hilbert_diff == std::vector<std::int64_t>{1, 2, 2, 1});
  CHECK(ps.hilbert_burch.rank_source() == 2);
}

TEST_CASE("type b curve (7, 0, b = 2)") {
  SeededRng rng(7);
  auto c = construct_set_curve(7, 0, 2, false, rng);
  const CurveInvariants inv(c.ideal);
  const auto n = CurveNumerics::make(7, 0, 2);
  CHECK(rao_is(inv, RaoKind::SetB, n));
  CHECK(inv.betti_table() == expected_betti(n, BettiCase::SetGeneral));
  for (int j = -3; j <= 12; ++j) {
    const auto e = expected_hilbert(n, j);
    CHECK(inv.hilbert(j) == e.h_c);
    CHECK(inv.h2(j) == e.h2);
  }
}

TEST_CASE("complete intersection case (7, 1, b = 2)") {
  SeededRng rng(8);
  auto c = construct_set_curve(7, 1, 2, true, rng);
  const CurveInvariants inv(c.ideal);
  const auto n = CurveNumerics::make(7, 1, 2);
  CHECK(rao_is(inv, RaoKind::SetB, n));
  CHECK(inv.betti_table() == expected_betti(n, BettiCase::SetCompleteIntersection));
}

TEST_CASE("ACM double plane curve") {
  SeededRng rng(9);
  auto c = construct_acm_double_plane(7, rng);
  const CurveInvariants inv(c.ideal);
  CHECK(inv.rao().values.empty());
  CHECK(inv.resolution().length() == 2);
  CHECK(c.g == 7);
}

TEST_CASE("extremal and subextremal curves") {
  SeededRng rng(11);
  auto e = construct_extremal(6, 0, rng);
  CHECK(e.certificates.size() == 3);
  SeededRng rng2(12);
  auto s = construct_subextremal(7, 0, rng2);
  const CurveInvariants inv(s.ideal);
  const auto n = CurveNumerics::make(7, 0);
  CHECK(rao_is(inv, RaoKind::Subextremal, n));
  CHECK(inv.degree() == 7);
}

TEST_CASE("basic double link shifts the Rao function") {
  auto R = space_ring();
  const Ideal skew(R, {parse_polynomial(R, "x*z"), parse_polynomial(R, "x*t"), parse_polynomial(R, "y*z"),
                       parse_polynomial(R, "y*t")});
  const auto q = parse_polynomial(R, "x*z + y*t");
  const auto F = parse_polynomial(R, "x + y + z + t");
  const Ideal linked = basic_double_link(skew, q, F);
  const CurveInvariants a(skew), b(linked);
  CHECK(b.degree() == 2 + 2 * 1);
  for (int j = -3; j <= 5; ++j) CHECK(b.h1(j + 1) == a.h1(j));
  CHECK_THROWS_AS(basic_double_link(skew, parse_polynomial(R, "x*y"), F), Error);
}

TEST_CASE("residual decomposition of a type b curve") {
  SeededRng rng(13);
  auto c = construct_set_curve(7, 0, 2, false, rng);
  const auto res = residual_decomposition(c.ideal, c.witnesses.at("H"));
  CHECK(res.delta == 2);
  CHECK(res.c_prime_planar);
  CHECK(res.planar_degree == 5);
  CHECK(res.deg_z == 7);
  CHECK(res.deg_z == res.expected_deg_z);
  CHECK(res.z_in_c_prime_section);
  const auto& S = res.plane_ring;
  CHECK(res.z == c.parts.at("Z").substitute({Polynomial::variable(S, 0), Polynomial::variable(S, 1),
                                             Polynomial::variable(S, 2)}, S));
}

TEST_CASE("quadric factors") {
  auto R = space_ring();
  auto q1 = analyze_quadric(parse_polynomial(R, "x^2"));
  CHECK(q1.rank == 1);
  auto q2 = analyze_quadric(parse_polynomial(R, "x^2 - 4*y^2 + x*z - 2*y*z"));
  CHECK(q2.rank == 2);
  REQUIRE(q2.linear_factors.size() == 2);
  CHECK(q2.linear_factors[0] * q2.linear_factors[1] == parse_polynomial(R, "x^2 - 4*y^2 + x*z - 2*y*z"));
  auto q3 = analyze_quadric(parse_polynomial(R, "x*y"));
  CHECK(q3.linear_factors.size() == 2);
  auto q4 = analyze_quadric(parse_polynomial(R, "x*y - z*t"));
  CHECK(q4.rank == 4);
  CHECK(q4.linear_factors.empty());
}

TEST_CASE("classification round trips") {
  SeededRng rng(21);
  SeededRng cr(22);
  auto c = construct_set_curve(8, -1, 1, false, rng);
  auto k = classify(c.ideal, cr);
  CHECK(k.label() == "set_b(1)");
  REQUIRE(k.structure);
  CHECK(k.structure->all_equal());
  REQUIRE(k.tail);
  CHECK(k.tail->all_equal());
  CHECK(k.b_matches_residual.value_or(false));

  auto s = construct_set_curve(7, 0, 0, false, rng);
  CHECK(classify(s.ideal, cr).label() == "subextremal");

  auto e = construct_extremal(7, 0, rng);
  CHECK(classify(e.ideal, cr).label() == "extremal");

  auto R = space_ring();
  const Ideal ci(R, {parse_polynomial(R, "x*y - z*t"), parse_polynomial(R, "x^3 + y^3 + z^3 + t^3")});
  CHECK(classify(ci, cr).label() == "ACM");
}

TEST_CASE("attached secant lines give reduced quadrics and a low-genus double line") {
  SeededRng rng(31), cr(32);
  auto s = construct_subextremal(7, -2, rng);
  auto k = classify(s.ideal, cr);
  CHECK(k.label() == "subextremal");
  REQUIRE(k.quadric);
  CHECK(k.quadric->reduced);
  const int r = CurveNumerics::make(7, -2).r;
  // The double line (x^2, xt, t^2, xf - te) has genus -deg f.
  CHECK(-s.witnesses.at("f").degree() <= -r);
  CHECK(k.tail->tail_positive);
}

TEST_CASE("basic double link examples") {
  auto R = space_ring();
  const Ideal line(R, {parse_polynomial(R, "x"), parse_polynomial(R, "y")});
  const auto cubic = basic_double_link(line, parse_polynomial(R, "x*y"), parse_polynomial(R, "z"));
  const auto dd = dimension_degree(cubic);
  CHECK(dd.proj_dim == 1);
  CHECK(dd.degree == 3);

  SeededRng rng(41), cr(42);
  auto e = construct_extremal(5, 0, rng);
  const auto F = random_form(1, R, rng);
  const auto linked = basic_double_link(e.ideal, parse_polynomial(R, "x*t"), F);
  const CurveInvariants a(e.ideal), b(linked);
  CHECK(b.degree() == 7);
  CHECK(b.genus() == 4);
  for (int j = a.table_lo(); j <= a.table_hi(); ++j) CHECK(b.h1(j + 1) == a.h1(j));
  CHECK(classify(b, cr).label() == "subextremal");
}
