#include "curvelab/closed_forms.hpp"

#include <climits>
#include <functional>
#include <string>
#include <vector>

#include "curvelab/error.hpp"
#include "curvelab/hilbert.hpp"

namespace curvelab {

namespace {

constexpr std::int64_t kNegInf = LLONG_MIN / 4;
constexpr std::int64_t kPosInf = LLONG_MAX / 4;

struct Branch {
  std::int64_t lo, hi;
  std::function<std::int64_t(std::int64_t)> f;
};

std::int64_t piecewise(const char* name, const std::vector<Branch>& branches, std::int64_t j) {
  std::optional<std::int64_t> value;
  for (const auto& b : branches) {
    if (j < b.lo || j > b.hi) continue;
    const auto v = b.f(j);
    if (value && *value != v)
      fail(ErrorKind::InternalInconsistency,
           std::string(name) + ": overlapping branches disagree at j = " + std::to_string(j));
    value = v;
  }
  if (!value) fail(ErrorKind::InternalInconsistency, std::string(name) + ": no branch covers j = " + std::to_string(j));
  return *value;
}

std::int64_t c2(std::int64_t n) { return binomial(n, 2); }

}  // namespace

CurveNumerics CurveNumerics::make(int d, int g, std::optional<int> b) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "degree must be positive");
  CurveNumerics n;
  n.d = d;
  n.g = g;
  n.r = static_cast<int>(c2(d - 3) - g + 1);
  n.a_ext = static_cast<int>(c2(d - 2) - g);
  if (b) {
    if (*b < 0 || *b > max_b(n.r))
      fail(ErrorKind::InvalidArgument, "b = " + std::to_string(*b) + " outside [0, floor((r-1)/2)] for r = " +
                                           std::to_string(n.r));
    n.b = b;
    n.a = n.r - *b - 1;
  }
  return n;
}

std::int64_t rho_extremal(const CurveNumerics& n, int j) {
  const std::int64_t d = n.d, g = n.g;
  const std::int64_t A = c2(d - 2) - g, B = c2(d - 1) - g;
  return piecewise("rho_E",
                   {{kNegInf, -A, [](std::int64_t) { return std::int64_t{0}; }},
                    {-A, 0, [&](std::int64_t k) { return A + k; }},
                    {0, d - 2, [&](std::int64_t) { return A; }},
                    {d - 2, B, [&](std::int64_t k) { return B - k; }},
                    {B, kPosInf, [](std::int64_t) { return std::int64_t{0}; }}},
                   j);
}

std::int64_t rho_subextremal(const CurveNumerics& n, int j) {
  const std::int64_t d = n.d, g = n.g;
  const std::int64_t A = c2(d - 3) - g, B = c2(d - 2) - g;
  // The first branch is closed at g - C(d-3, 2), where the next branch would also give 0.
  return piecewise("rho_SE",
                   {{kNegInf, -A, [](std::int64_t) { return std::int64_t{0}; }},
                    {-A + 1, 0, [&](std::int64_t k) { return A + k; }},
                    {1, d - 3, [&](std::int64_t) { return A + 1; }},
                    {d - 3, B, [&](std::int64_t k) { return B + 1 - k; }},
                    {B + 1, kPosInf, [](std::int64_t) { return std::int64_t{0}; }}},
                   j);
}

std::int64_t rho_b(const CurveNumerics& n, int j) {
  if (!n.b) fail(ErrorKind::InvalidArgument, "rho_b needs b");
  const std::int64_t d = n.d, r = n.r, b = *n.b;
  if (j <= 0) {
    const int k = static_cast<int>(d - 2 - j);
    if (k <= 0) fail(ErrorKind::InternalInconsistency, "rho_b reflection did not land in j > 0");
    return rho_b(n, k);
  }
  return piecewise("rho_b",
                   {{1, d - 3, [&](std::int64_t) { return r; }},
                    {d - 2, d - 2, [&](std::int64_t) { return r - 1; }},
                    {d - 2, d - 2 + b, [&](std::int64_t k) { return r - 1 - 2 * (k - d + 2); }},
                    {d - 2 + b, d + r - 3 - b, [&](std::int64_t k) { return r - 1 - b - k + d - 2; }},
                    {d + r - 2 - b, kPosInf, [](std::int64_t) { return std::int64_t{0}; }}},
                   j);
}

std::int64_t reference_rao(RaoKind kind, const CurveNumerics& n, int j) {
  switch (kind) {
    case RaoKind::Extremal:
      return rho_extremal(n, j);
    case RaoKind::Subextremal:
      return rho_subextremal(n, j);
    case RaoKind::SetB:
      return rho_b(n, j);
  }
  fail(ErrorKind::InvalidArgument, "unknown Rao kind");
}

std::int64_t h_b(int r, int b, int j) {
  if (b < 0 || b > CurveNumerics::max_b(r)) fail(ErrorKind::InvalidArgument, "b out of range");
  return piecewise("h_b",
                   {{kNegInf, -1, [](std::int64_t) { return std::int64_t{0}; }},
                    {0, 0, [](std::int64_t) { return std::int64_t{1}; }},
                    {1, b, [](std::int64_t) { return std::int64_t{2}; }},
                    {b + 1, r - 1 - b, [](std::int64_t) { return std::int64_t{1}; }},
                    {r - b, kPosInf, [](std::int64_t) { return std::int64_t{0}; }}},
                   j);
}

ExpectedHilbert expected_hilbert(const CurveNumerics& n, int j) {
  if (n.d < 7 || !n.b) fail(ErrorKind::InvalidArgument, "expected_hilbert needs d >= 7 and b");
  const std::int64_t d = n.d, g = n.g, r = n.r;
  auto rho = [&](std::int64_t k) { return rho_b(n, static_cast<int>(k)); };
  ExpectedHilbert e{};
  e.h2 = piecewise("h2",
                   {{kNegInf, -1, [&](std::int64_t k) { return rho(k) - d * k + g - 1; }},
                    {0, 0, [&](std::int64_t) { return r + g - 1; }},
                    {1, d - 5, [&](std::int64_t k) { return c2(d - 3 - k); }},
                    {d - 4, kPosInf, [](std::int64_t) { return std::int64_t{0}; }}},
                   j);
  e.h_c = piecewise("h_C",
                    {{kNegInf, -1, [](std::int64_t) { return std::int64_t{0}; }},
                     {0, d - 5, [&](std::int64_t k) { return d * k - g + 1 + c2(d - 3 - k) - rho(k); }},
                     {d - 4, kPosInf, [&](std::int64_t k) { return d * k - g + 1 - rho(k); }}},
                    j);
  e.gamma = piecewise("gamma",
                      {{kNegInf, -1, [](std::int64_t) { return std::int64_t{0}; }},
                       {0, 1, [](std::int64_t) { return std::int64_t{-1}; }},
                       {2, 2, [](std::int64_t) { return std::int64_t{0}; }},
                       {3, 3, [](std::int64_t) { return std::int64_t{1}; }},
                       {4, d - 1, [](std::int64_t) { return std::int64_t{0}; }},
                       {d, kPosInf,
                        [&](std::int64_t k) { return rho(k) - 3 * rho(k - 1) + 3 * rho(k - 2) - rho(k - 3); }}},
                      j);
  return e;
}

BettiTable expected_betti(const CurveNumerics& n, BettiCase c) {
  const int d = n.d, r = n.r;
  BettiTable t;
  switch (c) {
    case BettiCase::Subextremal:
      if (n.b && *n.b != 0) fail(ErrorKind::InvalidArgument, "subextremal resolution needs b = 0");
      for (int s : {2, 3, d - 1, r + d - 2}) t.add(0, s);
      for (int s : {4, d, r + d - 1, r + d - 1}) t.add(1, s);
      t.add(2, r + d);
      return t;
    case BettiCase::SetCompleteIntersection:
      if (!n.ci_admissible()) fail(ErrorKind::InvalidArgument, "complete intersection case needs r even, b = r/2 - 1");
      for (int s : {2, 3, d, r / 2 + d - 2}) t.add(0, s);
      for (int s : {4, d + 1, r / 2 + d - 1, r / 2 + d}) t.add(1, s);
      t.add(2, d + r / 2 + 1);
      return t;
    case BettiCase::SetGeneral: {
      if (!n.b) fail(ErrorKind::InvalidArgument, "general case needs b");
      const int b = *n.b, a = n.a;
      for (int s : {2, 3, d, d + b - 1, d + a - 1}) t.add(0, s);
      for (int s : {4, d + 1, d + b, d + b, d + a, d + a}) t.add(1, s);
      for (int s : {d + b + 1, d + a + 1}) t.add(2, s);
      return t;
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown Betti case");
}

std::int64_t residual_degree(int d, int g, int delta, int g_prime) {
  if (delta >= d) fail(ErrorKind::InvalidArgument, "residual degree needs delta < d");
  return c2(d - delta - 1) - g + g_prime + delta - 1;
}

FamilyDimensions family_dimensions(const CurveNumerics& n) {
  if (n.d < 7 || n.r < 3) fail(ErrorKind::InvalidArgument, "family dimensions need d >= 7 and r >= 3");
  const std::int64_t d = n.d, g = n.g, r = n.r;
  FamilyDimensions f;
  f.dim_extremal = 2 * n.a_ext + 4 + (d - 1) * (d + 2) / 2;
  f.dim_extremal_closed = 3 * d * (d - 3) / 2 + 9 - 2 * g;
  f.dim_F_SE = 2 * r + 6 + (d - 2) * (d + 1) / 2;
  f.dim_F_SET2 = 2 * r + 6 + (d - 2) * (d + 1) / 2;
  f.dim_SE_closed = 3 * d * (d - 5) / 2 + 19 - 2 * g;
  f.dim_in_fixed_double_plane = 2 * r + 3 + (d - 2) * (d + 1) / 2;
  f.dim_SET0_double_planes = 2 * r + 5 + (d - 2) * (d + 1) / 2;
  f.delta_gamma = (d - 2) * (d + 1) / 2 + 8 - r;
  f.epsilon = r - 4;
  f.hom_MM = 1;
  f.ext1_MM = 2 * r + 3;
  f.t_gamma_rho = f.delta_gamma + f.epsilon - f.hom_MM + f.ext1_MM;
  const int top = CurveNumerics::max_b(n.r);
  for (int b = 0; b <= top; ++b) f.stratum_codims.push_back(b == top ? 0 : 1);
  return f;
}

}  // namespace curvelab
