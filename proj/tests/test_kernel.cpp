#include <random>

#include "curvelab/error.hpp"
#include "curvelab/groebner.hpp"
#include "curvelab/hilbert.hpp"
#include "doctest.h"

using namespace curvelab;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

// Counts standard monomials of degree j directly.
std::int64_t count_standard(const std::vector<Mon>& leads, int nvars, int j) {
  std::int64_t n = 0;
  for (Mon m : mono::all_of_degree(nvars, j)) {
    bool in = false;
    for (Mon l : leads) in = in || mono::divides(mono::exponents_only(l), m);
    n += !in;
  }
  return n;
}

}  // namespace

TEST_CASE("field arithmetic") {
  PrimeField f(32003);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.to_signed(f.from_int(-5)) == -5);
  Coeff r = 0;
  CHECK(f.sqrt(f.mul(77, 77), r));
  CHECK(f.mul(r, r) == f.mul(77, 77));
  CHECK_THROWS_AS(PrimeField(32004), Error);
}

TEST_CASE("polynomial parse and print round trip") {
  auto R = space_ring();
  Polynomial f = P(R, "3*x^2*y - z t + 7");
  CHECK(parse_polynomial(R, f.to_string()) == f);
  CHECK_THROWS_AS(P(R, "x + w"), Error);
  CHECK((P(R, "x+y") * P(R, "x-y")) == P(R, "x^2 - y^2"));
}

TEST_CASE("normal form and membership") {
  auto R = space_ring();
  auto order = MonomialOrder::degrevlex(4);
  CHECK(normal_form(P(R, "x^2+x*y"), {P(R, "x")}, order).is_zero());
  auto gb = GroebnerBasis::compute(R, {P(R, "x^2"), P(R, "x*y"), P(R, "y^2"), P(R, "x*z - y*t")}, order);
  CHECK(gb.contains(P(R, "x*z^2 - y*z*t")));
  CHECK_FALSE(gb.contains(P(R, "z")));
  // idempotence
  auto gb2 = GroebnerBasis::compute(R, gb.elements(), order);
  CHECK(gb2.elements() == gb.elements());
}

TEST_CASE("Hilbert series of a double line") {
  auto R = space_ring();
  auto gb = GroebnerBasis::compute(R, {P(R, "x^2"), P(R, "x*y"), P(R, "y^2"), P(R, "x*z - y*t")},
                                   MonomialOrder::degrevlex(4));
  auto hs = HilbertSeries::of_monomial_ideal(gb.leading_monomials(), 4);
  CHECK(hs.krull_dimension() == 2);
  CHECK(hs.multiplicity() == 2);
  for (int j = 0; j < 8; ++j) CHECK(hs.value(j) == count_standard(gb.leading_monomials(), 4, j));
  // genus -1: P(j) = 2j + 2
  CHECK(hs.polynomial_value(0) == 2);
}

TEST_CASE("Hilbert series of random monomial ideals matches direct count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Mon> gens;
    const int ng = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < ng; ++i) {
      std::vector<int> e(4);
      for (auto& x : e) x = static_cast<int>(rng() % 4);
      gens.push_back(mono::from_exponents(e));
    }
    auto hs = HilbertSeries::of_monomial_ideal(gens, 4);
    for (int j = 0; j < 10; ++j) CHECK(hs.value(j) == count_standard(gens, 4, j));
  }
}

TEST_CASE("twisted cubic") {
  auto R = space_ring();
  auto gb = GroebnerBasis::compute(R, {P(R, "x*z - y^2"), P(R, "x*t - y*z"), P(R, "y*t - z^2")},
                                   MonomialOrder::degrevlex(4));
  auto hs = HilbertSeries::of_monomial_ideal(gb.leading_monomials(), 4);
  CHECK(hs.multiplicity() == 3);
  CHECK(hs.polynomial_value(0) == 1);
  for (int j = 0; j < 6; ++j) CHECK(hs.value(j) == 3 * j + 1);
}
