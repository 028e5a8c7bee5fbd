#include "curvelab/suites.hpp"

#include <algorithm>

#include "curvelab/classify.hpp"
#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"
#include "curvelab/report.hpp"

namespace curvelab {

void SuiteResult::record(const std::string& check, bool pass, const std::string& detail) {
  auto& c = counts[check];
  ++c.second;
  if (pass) ++c.first;
  else if (failures.size() < 50) failures.push_back(check + (detail.empty() ? "" : ": " + detail));
}

std::int64_t SuiteResult::failed() const {
  std::int64_t n = 0;
  for (const auto& [k, c] : counts) n += c.second - c.first;
  return n;
}

namespace {

std::pair<int, int> genus_range(const Grid& grid, int d) {
  const int top = static_cast<int>(binomial(d - 3, 2)) - 2;
  return {std::max(-30, grid.g_lo.value_or(-30)), std::min(top, grid.g_hi.value_or(top))};
}

std::string key(int d, int g, std::optional<int> b = std::nullopt) {
  return "(" + std::to_string(d) + ", " + std::to_string(g) + (b ? ", b=" + std::to_string(*b) : "") + ")";
}

// Evaluates f on [lo, hi]; false if any branch pair disagrees.
template <class F>
bool branches_agree(F f, int lo, int hi, std::string& why) {
  try {
    for (int j = lo; j <= hi; ++j) f(j);
    return true;
  } catch (const Error& e) {
    why = e.what();
    return false;
  }
}

}  // namespace

SuiteResult formula_suite(const Grid& grid) {
  SuiteResult s;
  s.name = "formulas";
  for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
    const auto [g_lo, g_hi] = genus_range(grid, d);
    for (int g = g_lo; g <= g_hi; ++g) {
      const auto n = CurveNumerics::make(d, g);
      const int span = static_cast<int>(binomial(d - 1, 2)) - g + d + 5;
      std::string why;
      s.record("rho_E branches", branches_agree([&](int j) { return rho_extremal(n, j); }, -span, span, why),
               key(d, g) + " " + why);
      s.record("rho_SE branches", branches_agree([&](int j) { return rho_subextremal(n, j); }, -span, span, why),
               key(d, g) + " " + why);
      for (int b = 0; b <= CurveNumerics::max_b(n.r); ++b) {
        const auto nb = CurveNumerics::make(d, g, b);
        s.record("rho_b branches", branches_agree([&](int j) { return rho_b(nb, j); }, -span, span, why),
                 key(d, g, b) + " " + why);
        s.record("h_b branches", branches_agree([&](int j) { return h_b(n.r, b, j); }, -2, n.r + 2, why),
                 key(d, g, b) + " " + why);
        s.record("Hilbert, h2, gamma branches",
                 branches_agree([&](int j) { return expected_hilbert(nb, j).h_c; }, -span, span, why),
                 key(d, g, b) + " " + why);
        std::int64_t sum = 0;
        for (int j = 0; j <= n.r + 1; ++j) sum += h_b(n.r, b, j);
        s.record("sum of h_b = r", sum == n.r, key(d, g, b));
      }
      const auto f = family_dimensions(n);
      s.record("dim F_SE closed form", f.dim_F_SE == f.dim_SE_closed, key(d, g));
      s.record("dim extremal closed form", f.dim_extremal == f.dim_extremal_closed, key(d, g));
      s.record("tangent space identity",
               f.t_gamma_rho == f.delta_gamma + f.epsilon - f.hom_MM + f.ext1_MM &&
                   f.t_gamma_rho == 2 * n.r + 6 + (d - 2) * (d + 1) / 2,
               key(d, g));
    }
  }
  return s;
}

SuiteResult paper_suite(const Grid& grid, std::uint64_t seed, Coeff p) {
  SuiteResult s;
  s.name = "paper";
  for (int d = grid.d_lo; d <= grid.d_hi; ++d) {
    const auto [g_lo, g_hi] = genus_range(grid, d);
    for (int g = g_lo; g <= g_hi; ++g) {
      const auto n = CurveNumerics::make(d, g);
      std::vector<std::pair<int, bool>> cases;
      for (int b = 0; b <= CurveNumerics::max_b(n.r); ++b) cases.push_back({b, false});
      if (n.r % 2 == 0 && n.r >= 2) cases.push_back({n.r / 2 - 1, true});
      for (const auto& [b, ci] : cases) {
        const std::string k = key(d, g, b) + (ci ? " ci" : "");
        try {
          SeededRng rng(seed ^ (static_cast<std::uint64_t>(d) << 32) ^ static_cast<std::uint64_t>(g + 1000) << 8 ^
                        static_cast<std::uint64_t>(b));
          const auto c = construct_set_curve(d, g, b, ci, rng, p);
          const CurveInvariants inv(c.ideal);
          auto crng = rng.fork(7);
          const auto cls = classify(inv, crng);
          s.record("classification", cls.b && *cls.b == b, k + " got " + cls.label());
          const auto rep = build_report(inv, cls, {});
          for (const auto& ch : rep.checks) s.record(ch.name, ch.pass, k);
        } catch (const Error& e) {
          s.record("construction", false, k + " " + e.what());
        }
      }
    }
  }
  return s;
}

SuiteResult kernel_suite(int ideals, std::uint64_t seed, Coeff p) {
  SuiteResult s;
  s.name = "kernel";
  const RingPtr R = space_ring(p);
  SeededRng rng(seed);
  for (int i = 0; i < ideals; ++i) {
    const int ngens = 2 + static_cast<int>(rng.next() % 2);
    std::vector<Polynomial> gens;
    for (int k = 0; k < ngens; ++k) gens.push_back(random_form(2 + static_cast<int>(rng.next() % 2), R, rng));
    const Ideal I(R, gens);
    const auto& gb = I.groebner();
    const auto again = GroebnerBasis::compute(R, gb.elements(), gb.order());
    bool same = again.elements().size() == gb.elements().size();
    for (std::size_t k = 0; same && k < gb.elements().size(); ++k) same = again.elements()[k] == gb.elements()[k];
    s.record("Groebner idempotence", same, "ideal " + std::to_string(i));
    bool member = true;
    Polynomial combo(R);
    for (const auto& g : gens) {
      member = member && gb.reduce(g).is_zero();
      combo = combo + g * random_form(4 - g.degree(), R, rng);
    }
    member = member && I.contains(combo);
    s.record("membership round trip", member, "ideal " + std::to_string(i));
    const auto f = random_form(4, R, rng);
    const auto nf = gb.reduce(f);
    s.record("normal form round trip", I.contains(f - nf) && gb.reduce(nf) == nf, "ideal " + std::to_string(i));
  }

  std::vector<std::pair<std::string, Ideal>> curves;
  auto P = [&](const char* t) { return parse_polynomial(R, t); };
  curves.push_back({"twisted cubic", Ideal(R, {P("x*z - y^2"), P("x*t - y*z"), P("y*t - z^2")})});
  curves.push_back({"skew lines", Ideal(R, {P("x*z"), P("x*t"), P("y*z"), P("y*t")})});
  curves.push_back({"double line", Ideal(R, {P("x^2"), P("x*y"), P("y^2"), P("x*z^2 - y*t^2")})});
  for (int b = 0; b <= 3; ++b) {
    auto crng = rng.fork(100 + b);
    curves.push_back({"set(7,0," + std::to_string(b) + ")", construct_set_curve(7, 0, b, false, crng, p).ideal});
  }
  for (const auto& [name, I] : curves) {
    const CurveInvariants inv(I);
    bool dual = true;
    try {
      inv.betti_table();
    } catch (const Error&) {
      dual = false;
    }
    s.record("dual-path Betti", dual, name);
    s.record("Riemann-Roch", inv.cohomology_table().riemann_roch_holds(inv.degree(), inv.genus()), name);
  }
  return s;
}

}  // namespace curvelab
