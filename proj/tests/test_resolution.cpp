#include <random>

#include "curvelab/linalg.hpp"
#include "curvelab/resolution.hpp"
#include "doctest.h"

using namespace curvelab;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

bool composes_to_zero(const Resolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    for (const auto& c : res.maps[i].compose(res.maps[i + 1]).columns)
      if (!c.is_zero()) return false;
  return true;
}

// Hilbert series numerator from the GB, compared with the alternating Betti sum.
void check_euler(const RingPtr& R, const std::vector<Polynomial>& gens, const Resolution& res) {
  auto gb = GroebnerBasis::compute(R, gens, MonomialOrder::degrevlex(R->nvars()));
  auto hs = HilbertSeries::of_monomial_ideal(gb.leading_monomials(), R->nvars());
  std::map<int, std::int64_t> alt;
  const auto betti = res.betti();
  for (const auto& [k, v] : betti.entries()) alt[k.second] += (k.first % 2 ? -v : v);
  std::erase_if(alt, [](const auto& kv) { return kv.second == 0; });
  CHECK(alt == hs.numerator());
}

}  // namespace

TEST_CASE("rank and kernel mod p") {
  PrimeField f(101);
  Matrix m(2, 3);
  m.at(0, 0) = 1, m.at(0, 1) = 2, m.at(0, 2) = 3;
  m.at(1, 0) = 2, m.at(1, 1) = 4, m.at(1, 2) = 6;
  CHECK(rank(m, f) == 1);
  auto ker = kernel(m, f);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(f.add(f.add(v[0], f.mul(2, v[1])), f.mul(3, v[2])) == 0);
}

TEST_CASE("resolution of the twisted cubic") {
  auto R = space_ring();
  std::vector<Polynomial> g{P(R, "x*z - y^2"), P(R, "x*t - y*z"), P(R, "y*t - z^2")};
  auto res = minimal_free_resolution(R, g);
  auto b = res.betti();
  CHECK(b.get(1, 2) == 3);
  CHECK(b.get(2, 3) == 2);
  CHECK(b.length() == 2);
  CHECK(composes_to_zero(res));
  check_euler(R, g, res);
}

TEST_CASE("resolution of a complete intersection with redundant generators") {
  auto R = space_ring();
  std::vector<Polynomial> g{P(R, "x^2"), P(R, "y^3"), P(R, "x^2*z + y^3"), P(R, "x*y^3")};
  auto res = minimal_free_resolution(R, g);
  auto b = res.betti();
  CHECK(b.get(1, 2) == 1);
  CHECK(b.get(1, 3) == 1);
  CHECK(b.get(2, 5) == 1);
  CHECK(b.length() == 2);
}

TEST_CASE("resolutions of random ideals satisfy the Euler characteristic identity") {
  auto R = space_ring();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      const int d = 2 + static_cast<int>(rng() % 2);
      std::vector<Term> ts;
      for (Mon m : mono::all_of_degree(4, d))
        if (rng() % 3 == 0) ts.push_back({m, static_cast<Coeff>(1 + rng() % 100)});
      gens.push_back(Polynomial::from_terms(R, ts));
    }
    auto res = minimal_free_resolution(R, gens);
    CHECK(composes_to_zero(res));
    check_euler(R, gens, res);
  }
}
