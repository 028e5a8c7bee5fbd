#include "curvelab/factory.hpp"

#include <algorithm>
#include <string>

#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"
#include "curvelab/invariants.hpp"
#include "curvelab/linalg.hpp"

namespace curvelab {

namespace {

constexpr int X = 0, Y = 1, Zv = 2, T = 3;

Polynomial var(const RingPtr& R, int v) { return Polynomial::variable(R, v); }
Polynomial cst(const RingPtr& R, std::int64_t c) { return Polynomial::constant(R, R->field.from_int(c)); }

// k[y,z,t] -> k[x,y,z,t]
Polynomial lift(const Polynomial& f, const RingPtr& R) {
  return f.substitute({var(R, Y), var(R, Zv), var(R, T)}, R);
}

// Product of (v - c y) for c = 1..n in the plane ring.
Polynomial points_on_axis(const RingPtr& S, int v, int n) {
  Polynomial p = cst(S, 1);
  for (int c = 1; c <= n; ++c) p = p * (var(S, v) - var(S, 0).scaled(S->field.from_int(c)));
  return p;
}

Ideal point_ideal(const RingPtr& S, std::int64_t u, std::int64_t w) {
  // [1:u:w]
  const auto y = var(S, 0);
  return Ideal(S, {var(S, 1) - y.scaled(S->field.from_int(u)), var(S, 2) - y.scaled(S->field.from_int(w))});
}

bool irrelevant(const std::vector<Polynomial>& gens) {
  return dimension_degree(Ideal(gens.front().ring(), gens)).proj_dim < 0;
}

void check_curve(const CurveBundle& c) {
  const auto dd = dimension_degree(c.ideal);
  if (dd.proj_dim != 1 || dd.degree != c.d || *dd.genus != c.g)
    fail(ErrorKind::InternalInconsistency,
         c.kind + ": constructed ideal has (dim, deg, genus) = (" + std::to_string(dd.proj_dim) + ", " +
             std::to_string(dd.degree) + ", " + std::to_string(dd.genus.value_or(0)) + "), expected (1, " +
             std::to_string(c.d) + ", " + std::to_string(c.g) + ")");
}

Coeff evaluate(const Polynomial& f, const std::vector<Coeff>& point) {
  std::vector<Polynomial> img;
  for (Coeff c : point) img.push_back(Polynomial::constant(f.ring(), c));
  const auto v = f.substitute(img, f.ring());
  return v.is_zero() ? 0 : v.leading().coeff;
}

bool rao_matches(const CurveInvariants& inv, RaoKind kind, const CurveNumerics& n) {
  for (int j = inv.table_lo(); j <= inv.table_hi(); ++j)
    if (inv.h1(j) != reference_rao(kind, n, j)) return false;
  return true;
}

}  // namespace

PointScheme points_on_conic_ideal(const ConicPointConfig& cfg, const RingPtr& S) {
  if (S->nvars() != 3) fail(ErrorKind::RingMismatch, "point schemes live in the plane ring");
  if (cfg.a < 0 || cfg.b < 0 || cfg.r() < 1) fail(ErrorKind::InvalidArgument, "empty or negative point configuration");
  if (cfg.a >= static_cast<int>(S->field.characteristic()) || cfg.b >= static_cast<int>(S->field.characteristic()))
    fail(ErrorKind::InvalidArgument, "characteristic too small for distinct points");
  std::optional<Ideal> acc;
  auto add = [&](const Ideal& P) { acc = acc ? intersect(*acc, P) : P; };
  if (cfg.include_intersection_point) add(point_ideal(S, 0, 0));
  for (int c = 1; c <= cfg.b; ++c) add(point_ideal(S, 0, c));
  for (int c = 1; c <= cfg.a; ++c) add(point_ideal(S, c, 0));
  Ideal I = acc->minimalized();

  if (cfg.include_intersection_point) {
    const auto z = var(S, 1), t = var(S, 2);
    const Ideal minors(S, {z * t, points_on_axis(S, 2, cfg.b) * t, z * points_on_axis(S, 1, cfg.a)});
    if (minors != I) fail(ErrorKind::InternalInconsistency, "point ideal differs from the determinantal ideal");
  }
  const auto dd = dimension_degree(I);
  if (dd.proj_dim != 0 || dd.degree != cfg.r()) fail(ErrorKind::InternalInconsistency, "wrong number of points");

  PointScheme ps{I, {}, {}, {}};
  const auto res = minimal_free_resolution(S, I.generators());
  if (res.length() >= 2) ps.hilbert_burch = res.maps[1];
  for (const auto& g : I.generators()) ps.generator_degrees.push_back(g.degree());
  std::sort(ps.generator_degrees.begin(), ps.generator_degrees.end());
  const auto hs = I.hilbert_series();
  std::int64_t prev = 0;
  for (int j = 0;; ++j) {
    ps.hilbert_diff.push_back(hs.value(j) - prev);
    prev = hs.value(j);
    if (prev == cfg.r()) break;
  }
  return ps;
}

CurveBundle construct_set_curve(int d, int g, int b, bool complete_intersection, SeededRng& rng, Coeff p) {
  if (d < 7) fail(ErrorKind::InvalidArgument, "curves of subextremal type need d >= 7");
  const auto n = CurveNumerics::make(d, g, b);
  if (n.r < 1) fail(ErrorKind::InvalidArgument, "curve would be ACM (r = 0)");
  if (complete_intersection && !n.ci_admissible())
    fail(ErrorKind::InvalidArgument, "complete intersection case needs r even and b = r/2 - 1");
  const RingPtr R = space_ring(p), S = plane_ring(p);

  CurveBundle out;
  out.kind = complete_intersection ? "set_ci" : "set";
  out.d = d;
  out.g = g;
  out.b = b;
  out.seed = rng.seed();

  const auto x = var(R, X), z = var(R, Zv), t = var(R, T);
  const auto phi = z * t;
  const auto h = var(R, Y).pow(d - 4);
  out.witnesses["H"] = x;
  out.witnesses["phi"] = phi;
  out.witnesses["h"] = h;

  if (complete_intersection) {
    const int k = n.r / 2;
    Polynomial psi_s = cst(S, 1);
    for (int c = 1; c <= k; ++c) psi_s = psi_s * (var(S, 1) + var(S, 2) - var(S, 0).scaled(S->field.from_int(c)));
    const Polynomial phi_s = var(S, 1) * var(S, 2);
    out.parts.emplace("Z", Ideal(S, {phi_s, psi_s}));
    out.witnesses["psi"] = lift(psi_s, R);
    for (int attempt = 1; attempt <= 10; ++attempt) {
      out.attempts = attempt;
      const auto F_s = random_form(d - 3 + k, S, rng);
      if (!irrelevant({psi_s, phi_s, F_s})) continue;
      const auto F = lift(F_s, R);
      out.witnesses["F"] = F;
      out.ideal = Ideal(R, {x * x, x * phi, phi * phi * h, lift(psi_s, R) * phi * h + x * F});
      out.certificates = {"(psi, phi, F) irrelevant"};
      check_curve(out);
      out.certificates.push_back("degree and genus");
      return out;
    }
    fail(ErrorKind::ConstructionFailure, "no irrelevant (psi, phi, F) within 10 draws");
  }

  const ConicPointConfig cfg{b, n.a, true};
  out.parts.emplace("Z", points_on_conic_ideal(cfg, S).ideal);
  const auto p_s = points_on_axis(S, 2, b), q_s = points_on_axis(S, 1, n.a);
  const auto pp = lift(p_s, R), qq = lift(q_s, R);
  out.witnesses["p"] = pp;
  out.witnesses["q"] = qq;
  const Polynomial zs = var(S, 1), ts = var(S, 2);
  for (int attempt = 1; attempt <= 10; ++attempt) {
    out.attempts = attempt;
    const auto F_s = random_form(b + d - 3, S, rng);
    const auto G_s = random_form(n.a + d - 3, S, rng);
    // 2x2 minors of [[p, z, 0, F], [q, 0, t, G]]
    const std::vector<Polynomial> minors{-(zs * q_s), p_s * ts, p_s * G_s - q_s * F_s, zs * ts, zs * G_s, -(ts * F_s)};
    if (!irrelevant(minors)) continue;
    const auto F = lift(F_s, R), G = lift(G_s, R);
    out.witnesses["F"] = F;
    out.witnesses["G"] = G;
    out.ideal = Ideal(R, {x * x, x * phi, phi * phi * h, phi * h * pp * t - x * t * F, x * z * G - phi * h * z * qq});
    out.certificates = {"minors of [p z 0 F; q 0 t G] irrelevant"};
    check_curve(out);
    out.certificates.push_back("degree and genus");
    return out;
  }
  fail(ErrorKind::ConstructionFailure, "no irrelevant minor ideal within 10 draws");
}

CurveBundle construct_acm_double_plane(int d, SeededRng& rng, Coeff p) {
  if (d < 4) fail(ErrorKind::InvalidArgument, "double-plane construction needs d >= 4");
  const RingPtr R = space_ring(p), S = plane_ring(p);
  CurveBundle out;
  out.kind = "acm_double_plane";
  out.d = d;
  out.g = static_cast<int>(binomial(d - 3, 2) + 1);
  out.seed = rng.seed();
  const auto x = var(R, X);
  const auto phi = var(R, Zv) * var(R, T);
  const auto h = var(R, Y).pow(d - 4);
  for (int attempt = 1; attempt <= 10; ++attempt) {
    out.attempts = attempt;
    const auto F_s = random_form(d - 3, S, rng);
    // phi and F must not share a component of the plane.
    if (dimension_degree(Ideal(S, {var(S, 1) * var(S, 2), F_s})).proj_dim != 0) continue;
    const auto F = lift(F_s, R);
    out.witnesses = {{"H", x}, {"phi", phi}, {"h", h}, {"F", F}};
    out.ideal = Ideal(R, {x * x, x * phi, phi * h + x * F});
    out.certificates = {"phi and F coprime"};
    check_curve(out);
    out.certificates.push_back("degree and genus");
    return out;
  }
  fail(ErrorKind::ConstructionFailure, "no coprime (phi, F) within 10 draws");
}


namespace {

// Plane curve (x, t e_D) of degree d - 1 through the line x = t = 0, union the
// double line (x^2, x t, t^2, x f - t e) of genus -m.
Ideal extremal_model(const RingPtr& R, const Polynomial& e_d, const Polynomial& f, const Polynomial& e) {
  const auto x = var(R, X), t = var(R, T);
  const Ideal D(R, {x, t * e_d});
  const Ideal Yd(R, {x * x, x * t, t * t, x * f - t * e});
  return intersect(D, Yd).minimalized();
}

Polynomial random_binary_form(int deg, const RingPtr& R, SeededRng& rng) {
  Polynomial f(R);
  for (int i = 0; i <= deg; ++i)
    f = f + (var(R, Y).pow(i) * var(R, Zv).pow(deg - i)).scaled(rng.coeff(R->field));
  return f;
}

}  // namespace

CurveBundle construct_extremal(int d, int g, SeededRng& rng, Coeff p) {
  if (d < 5) fail(ErrorKind::InvalidArgument, "extremal construction needs d >= 5");
  const auto n = CurveNumerics::make(d, g);
  if (n.a_ext < 1) fail(ErrorKind::InvalidArgument, "extremal curves need g <= C(d-2, 2) - 1");
  const RingPtr R = space_ring(p), S = plane_ring(p);
  CurveBundle out;
  out.kind = "extremal";
  out.d = d;
  out.g = g;
  out.seed = rng.seed();

  for (int attempt = 1; attempt <= 10; ++attempt) {
    out.attempts = attempt;
    const auto e_d = lift(random_form(d - 2, S, rng), R);
    auto genus_for = [&](int m, Polynomial& f, Polynomial& e) {
      f = random_binary_form(m, R, rng);
      e = random_binary_form(m, R, rng);
      const auto dd = dimension_degree(extremal_model(R, e_d, f, e));
      return dd.proj_dim == 1 && dd.degree == d ? dd.genus : std::nullopt;
    };
    Polynomial f, e;
    const auto g0 = genus_for(0, f, e);
    if (!g0) continue;
    // Each unit of m lowers the genus by one; verified below.
    const int m = static_cast<int>(*g0 - g);
    if (m < 0 || m > n.a_ext + 2) fail(ErrorKind::InvalidArgument, "genus out of reach of the extremal model");
    const auto gm = genus_for(m, f, e);
    if (!gm || *gm != g) continue;
    out.ideal = extremal_model(R, e_d, f, e);
    out.witnesses = {{"e_D", e_d}, {"f", f}, {"e", e}};
    out.parts.emplace("line", Ideal(R, {var(R, X), var(R, T)}));
    check_curve(out);
    out.certificates = {"degree and genus"};
    const CurveInvariants inv(out.ideal);
    if (!rao_matches(inv, RaoKind::Extremal, n) || inv.h0(2) != 2) continue;
    out.certificates.push_back("rao function equals rho_E");
    out.certificates.push_back("h0(I(2)) = 2");
    return out;
  }
  fail(ErrorKind::ConstructionFailure, "extremal model failed its certificates in 10 attempts");
}

CurveBundle attach_two_secant_line(const CurveBundle& ext, SeededRng& rng, int budget) {
  if (ext.kind != "extremal") fail(ErrorKind::InvalidArgument, "attach_two_secant_line needs an extremal bundle");
  const RingPtr R = ext.ideal.ring();
  const PrimeField& F = R->field;
  const auto& f = ext.witnesses.at("f");
  const auto& e = ext.witnesses.at("e");
  CurveBundle out;
  out.kind = "subextremal";
  out.d = ext.d + 1;
  out.g = ext.g + 1;
  out.seed = rng.seed();
  out.parts = ext.parts;
  out.parts.emplace("extremal", ext.ideal);
  const auto n = CurveNumerics::make(out.d, out.g);

  for (int attempt = 1; attempt <= budget; ++attempt) {
    out.attempts = attempt;
    const std::vector<Coeff> P{0, rng.coeff(F, true), rng.coeff(F), 0};
    const Coeff fP = evaluate(f, P), eP = evaluate(e, P);
    if (eP == 0) continue;
    // Tangent direction inside the plane f(P) x - e(P) t = 0, off the plane x = 0.
    const std::vector<Coeff> v{1, rng.coeff(F), rng.coeff(F), F.mul(fP, F.inv(eP))};
    Matrix M(2, 4);
    for (int c = 0; c < 4; ++c) M.at(0, c) = P[c], M.at(1, c) = v[c];
    const auto ker = kernel(M, F);
    if (ker.size() != 2) continue;
    std::vector<Polynomial> lin;
    for (const auto& k : ker) {
      Polynomial l(R);
      for (int c = 0; c < 4; ++c) l = l + var(R, c).scaled(k[c]);
      lin.push_back(l);
    }
    const Ideal L(R, lin);
    const auto meet = dimension_degree(L + ext.ideal);
    if (meet.proj_dim != 0 || meet.degree != 2) continue;
    out.ideal = intersect(ext.ideal, L).minimalized();
    out.parts.insert_or_assign("secant", L);
    out.witnesses = ext.witnesses;
    out.witnesses["L1"] = lin[0];
    out.witnesses["L2"] = lin[1];
    check_curve(out);
    out.certificates = {"line meets the extremal curve in length 2", "degree and genus"};
    const CurveInvariants inv(out.ideal);
    if (!rao_matches(inv, RaoKind::Subextremal, n)) continue;
    out.certificates.push_back("rao function equals rho_SE");
    return out;
  }
  fail(ErrorKind::ConstructionFailure, "no 2-secant line passed within the budget");
}

CurveBundle construct_subextremal(int d, int g, SeededRng& rng, Coeff p) {
  auto ext_rng = rng.fork(1);
  const auto ext = construct_extremal(d - 1, g - 1, ext_rng, p);
  auto line_rng = rng.fork(2);
  auto out = attach_two_secant_line(ext, line_rng);
  out.seed = rng.seed();
  return out;
}

Ideal basic_double_link(const Ideal& I, const Polynomial& q, const Polynomial& F) {
  if (!I.contains(q)) fail(ErrorKind::InvalidArgument, "q is not in the ideal");
  if (!q.is_homogeneous() || !F.is_homogeneous() || F.is_zero())
    fail(ErrorKind::NotHomogeneous, "basic double link needs homogeneous q and F");
  if (polynomial_gcd(q, F).degree() > 0) fail(ErrorKind::InvalidArgument, "q and F share a factor");
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(F * g);
  gens.push_back(q);
  return saturate(Ideal(I.ring(), gens)).minimalized();
}

ResidualData residual_decomposition(const Ideal& I, const Polynomial& H) {
  const RingPtr R = I.ring();
  if (!H.is_homogeneous() || H.degree() != 1) fail(ErrorKind::InvalidArgument, "H must be a linear form");
  const PrimeField& F = R->field;
  ResidualData out;
  out.plane = H;
  out.c_prime = quotient_by(I, H).minimalized();

  // Solve H = 0 for the first variable with a nonzero coefficient.
  int k = 0;
  while (H.coefficient_of(mono::variable(k)) == 0) ++k;
  std::vector<std::string> names;
  for (int v = 0; v < R->nvars(); ++v)
    if (v != k) names.push_back(R->names[v]);
  out.plane_ring = make_ring(names, F.characteristic());
  const RingPtr& S = out.plane_ring;
  std::vector<Polynomial> img(R->nvars(), Polynomial(S));
  const Coeff scale = F.neg(F.inv(H.coefficient_of(mono::variable(k))));
  for (int v = 0, s = 0; v < R->nvars(); ++v) {
    if (v == k) continue;
    img[v] = var(S, s++);
    img[k] = img[k] + var(S, s - 1).scaled(F.mul(scale, H.coefficient_of(mono::variable(v))));
  }

  out.section = saturate(I.substitute(img, S)).minimalized();
  Polynomial f = out.section.generators().front();
  for (const auto& gen : out.section.generators()) f = polynomial_gcd(f, gen);
  out.f_d = f.monic();
  out.planar_degree = f.degree();
  out.z = out.planar_degree > 0 ? saturate(quotient_by(out.section, f)).minimalized() : out.section;

  const auto cd = dimension_degree(out.c_prime);
  if (cd.proj_dim == 1) {
    out.delta = static_cast<int>(cd.degree);
    out.g_prime = *cd.genus;
  }
  const auto zd = dimension_degree(out.z);
  out.deg_z = zd.proj_dim == 0 ? zd.degree : 0;
  const auto dd = dimension_degree(I);
  if (dd.proj_dim == 1 && out.delta < dd.degree)
    out.expected_deg_z = residual_degree(static_cast<int>(dd.degree), static_cast<int>(*dd.genus), out.delta,
                                         static_cast<int>(out.g_prime));
  out.z_in_c_prime_section = out.z.contains(out.c_prime.substitute(img, S));
  out.c_prime_planar = out.c_prime.dim_in_degree(1) > 0;
  return out;
}

QuadricInfo analyze_quadric(const Polynomial& q) {
  const RingPtr R = q.ring();
  const PrimeField& F = R->field;
  if (F.characteristic() == 2) fail(ErrorKind::InvalidArgument, "quadric analysis needs odd characteristic");
  if (q.is_zero() || !q.is_homogeneous() || q.degree() != 2) fail(ErrorKind::InvalidArgument, "not a quadric");
  const int n = R->nvars();
  const Coeff half = F.inv(2);
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Coeff c = q.coefficient_of(mono::mul(mono::variable(i), mono::variable(j)));
      A.at(i, j) = i == j ? c : F.mul(c, half);
    }
  QuadricInfo info;
  info.rank = static_cast<int>(rank(A, F));
  info.reduced = info.rank >= 2;
  auto row_form = [&](const Matrix& M, int k) {
    Polynomial l(R);
    for (int j = 0; j < n; ++j) l = l + var(R, j).scaled(M.at(k, j));
    return l;
  };
  auto diag = [&](const Matrix& M) {
    for (int k = 0; k < n; ++k)
      if (M.at(k, k)) return k;
    return -1;
  };
  if (info.rank == 1) {
    const auto L = row_form(A, diag(A)).monic();
    info.linear_factors = {L, L};
  } else if (info.rank == 2) {
    const int k = diag(A);
    Polynomial L1(R);
    if (k >= 0) {
      // q = (A_kk x_k + B)^2 / A_kk - disc / A_kk with disc = B^2 - A_kk C of rank 1.
      Polynomial B(R);
      for (int j = 0; j < n; ++j)
        if (j != k) B = B + var(R, j).scaled(A.at(k, j));
      const auto lin = var(R, k).scaled(A.at(k, k)) + B;
      const auto disc = lin * lin - q.scaled(A.at(k, k));
      Matrix D(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Coeff c = disc.coefficient_of(mono::mul(mono::variable(i), mono::variable(j)));
          D.at(i, j) = i == j ? c : F.mul(c, half);
        }
      const int kd = diag(D);
      Coeff root = 0;
      // disc = M^2 / D_kk with M = row kd; a square iff D_kk is.
      if (kd < 0 || !F.sqrt(D.at(kd, kd), root)) return info;
      L1 = lin + row_form(D, kd).scaled(F.inv(root));
    } else {
      int kk = 0;
      while (row_form(A, kk).is_zero()) ++kk;
      L1 = row_form(A, kk);
    }
    const auto L2 = exact_divide(q, L1);
    info.linear_factors = {L1.monic(), L2.monic()};
  }
  return info;
}

Ideal random_coordinate_change(const Ideal& I, SeededRng& rng) {
  const RingPtr R = I.ring();
  const PrimeField& F = R->field;
  const int n = R->nvars();
  for (;;) {
    Matrix M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = rng.coeff(F);
    if (static_cast<int>(rank(M, F)) != n) continue;
    std::vector<Polynomial> img;
    for (int i = 0; i < n; ++i) {
      Polynomial l(R);
      for (int j = 0; j < n; ++j) l = l + var(R, j).scaled(M.at(i, j));
      img.push_back(l);
    }
    return I.substitute(img, R);
  }
}

}  // namespace curvelab
