#include "curvelab/error.hpp"
#include "curvelab/ideal.hpp"
#include "doctest.h"

using namespace curvelab;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }
Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(P(r, g));
  return Ideal(r, v);
}

}  // namespace

TEST_CASE("quotients") {
  auto R = space_ring();
  CHECK(quotient_by(I(R, {"x^2"}), P(R, "x")) == I(R, {"x"}));
  CHECK(ideal_quotient(I(R, {"x*y", "x*z"}), I(R, {"x"})) == I(R, {"y", "z"}));
  auto J = I(R, {"x^2*y", "y*z^3", "x*t^2 + y^3"});
  CHECK(ideal_quotient(J, Ideal::unit(R)) == J);
  CHECK(quotient_by(J, P(R, "y")).contains(J));
}

TEST_CASE("saturation") {
  auto R = space_ring();
  auto m = Ideal::irrelevant(R);
  CHECK(saturate(I(R, {"x^2"}), m) == I(R, {"x^2"}));
  CHECK(saturate(I(R, {"x^2", "x*y", "x*z", "x*t"}), m) == I(R, {"x"}));
  auto s = saturate(I(R, {"x^3", "x^2*y", "y^4*z"}), I(R, {"x", "y"}));
  CHECK(saturate(s, I(R, {"x", "y"})) == s);
}

TEST_CASE("intersection") {
  auto R = space_ring();
  CHECK(intersect(I(R, {"x"}), I(R, {"y"})) == I(R, {"x*y"}));
  auto c = intersect(I(R, {"x", "y"}), I(R, {"z", "t"}));
  CHECK(c == I(R, {"x*z", "x*t", "y*z", "y*t"}));
  auto dd = dimension_degree(c);
  CHECK(dd.proj_dim == 1);
  CHECK(dd.degree == 2);
  CHECK(*dd.genus == -1);
  auto A = I(R, {"x^2", "y*z"}), B = I(R, {"x*y", "z^2 - t^2"}), C = I(R, {"x + t", "y^2"});
  CHECK(intersect(A, B) == intersect(B, A));
  CHECK(intersect(intersect(A, B), C) == intersect(A, intersect(B, C)));
  auto AB = intersect(A, B);
  for (const auto& g : AB.generators()) {
    CHECK(A.contains(g));
    CHECK(B.contains(g));
  }
}

TEST_CASE("random forms are deterministic") {
  auto R = space_ring();
  SeededRng a(42), b(42);
  CHECK(random_form(3, R, a) == random_form(3, R, b));
  CHECK(!random_form(0, R, a).is_zero());
  CHECK(random_form(4, R, a) != random_form(4, R, a));
}

TEST_CASE("dimension and degree") {
  auto R = space_ring();
  auto line = dimension_degree(I(R, {"x", "y"}));
  CHECK(line.proj_dim == 1);
  CHECK(line.degree == 1);
  CHECK(*line.genus == 0);
  auto S = plane_ring();
  // four points [1:0:0], [0:1:0], [0:0:1], [1:1:1]
  auto pts = intersect(intersect(I(S, {"z", "t"}), I(S, {"y", "t"})),
                       intersect(I(S, {"y", "z"}), I(S, {"y - z", "z - t"})));
  auto dd = dimension_degree(pts);
  CHECK(dd.proj_dim == 0);
  CHECK(dd.degree == 4);
  CHECK(!dd.genus);
  CHECK(dimension_degree(Ideal::irrelevant(R)).proj_dim == -1);
}

TEST_CASE("gcd and exact division") {
  auto S = plane_ring();
  auto f = P(S, "y - z") * P(S, "y^2 + z*t");
  auto g = P(S, "y - z") * P(S, "t^3 + y*z^2");
  CHECK(polynomial_gcd(f, g) == P(S, "y - z"));
  CHECK(exact_divide(f, P(S, "y - z")) == P(S, "y^2 + z*t"));
  CHECK_THROWS_AS(exact_divide(f, P(S, "t")), Error);
}
