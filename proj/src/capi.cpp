#include "curvelab.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "curvelab/classify.hpp"
#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"
#include "curvelab/factory.hpp"
#include "curvelab/report.hpp"
#include "curvelab/suites.hpp"

using namespace curvelab;

struct cl_ideal {
  Ideal ideal;
};

struct cl_curve {
  Ideal ideal;
  ReportInput input;
};

namespace {

thread_local std::string last_error;

cl_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return CL_ERR_INVALID_ARGUMENT;
    case ErrorKind::RingMismatch: return CL_ERR_RING_MISMATCH;
    case ErrorKind::NotHomogeneous: return CL_ERR_NOT_HOMOGENEOUS;
    case ErrorKind::ResourceLimit: return CL_ERR_RESOURCE_LIMIT;
    case ErrorKind::ConstructionFailure: return CL_ERR_CONSTRUCTION_FAILURE;
    case ErrorKind::ParseError: return CL_ERR_PARSE;
    case ErrorKind::NotACurve: return CL_ERR_NOT_A_CURVE;
    case ErrorKind::InternalInconsistency: return CL_ERR_INTERNAL;
  }
  return CL_ERR_UNKNOWN;
}

template <class F>
cl_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return CL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return CL_ERR_UNKNOWN;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Coeff characteristic_or_default(std::uint32_t p) {
  if (p) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "characteristic must be an odd prime");
    return p;
  }
  std::uint32_t def = 0;
  if (cl_default_characteristic(&def) != CL_OK) fail(ErrorKind::InvalidArgument, last_error);
  return def;
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorKind::InvalidArgument, std::string(what) + " is null");
}

// Table over j in [lo, hi] as [j, value] pairs.
template <class F>
nlohmann::ordered_json table(int lo, int hi, F f) {
  auto a = nlohmann::ordered_json::array();
  for (int j = lo; j <= hi; ++j) a.push_back({j, f(j)});
  return a;
}

}  // namespace

extern "C" {

const char* cl_version(void) { return "1.0.0"; }
const char* cl_last_error(void) { return last_error.c_str(); }

const char* cl_status_name(cl_status s) {
  switch (s) {
    case CL_OK: return "ok";
    case CL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CL_ERR_RING_MISMATCH: return "ring mismatch";
    case CL_ERR_NOT_HOMOGENEOUS: return "not homogeneous";
    case CL_ERR_RESOURCE_LIMIT: return "resource limit";
    case CL_ERR_CONSTRUCTION_FAILURE: return "construction failure";
    case CL_ERR_PARSE: return "parse error";
    case CL_ERR_NOT_A_CURVE: return "not a curve";
    case CL_ERR_INTERNAL: return "internal inconsistency";
    case CL_ERR_UNKNOWN: break;
  }
  return "unknown error";
}

void cl_string_free(char* s) { std::free(s); }

cl_status cl_default_characteristic(uint32_t* out) {
  return guarded([&] {
    require(out, "out");
    const char* env = std::getenv("CURVELAB_CHAR");
    if (!env || !*env) {
      *out = PrimeField::kDefaultCharacteristic;
      return;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end || v < 3 || v >= (1ULL << 31) || !is_prime(v))
      fail(ErrorKind::InvalidArgument, std::string("CURVELAB_CHAR is not an odd prime below 2^31: ") + env);
    *out = static_cast<uint32_t>(v);
  });
}

cl_status cl_ideal_parse(const char* text, uint32_t characteristic, cl_ideal** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const Coeff p = characteristic_or_default(characteristic);
    *out = new cl_ideal{read_ideal_text(text, space_ring(p))};
  });
}

cl_status cl_ideal_text(const cl_ideal* ideal, const char* header, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = dup(write_ideal_text(ideal->ideal, header ? header : ""));
  });
}

void cl_ideal_free(cl_ideal* ideal) { delete ideal; }

cl_status cl_construct(const cl_construct_params* params, cl_curve** out) {
  return guarded([&] {
    require(params, "params");
    require(params->kind, "kind");
    require(out, "out");
    const Coeff p = characteristic_or_default(params->characteristic);
    const std::string kind = params->kind;
    SeededRng rng(params->seed);
    CurveBundle bundle;
    if (kind == "set") {
      if (!params->has_b) fail(ErrorKind::InvalidArgument, "--kind set needs --b");
      bundle = construct_set_curve(params->d, params->g, params->b, params->ci != 0, rng, p);
    } else if (kind == "extremal") {
      bundle = construct_extremal(params->d, params->g, rng, p);
    } else if (kind == "subextremal") {
      bundle = construct_subextremal(params->d, params->g, rng, p);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown kind '" + kind + "'");
    }
    auto* c = new cl_curve{bundle.ideal, {}};
    c->input.source = "construct";
    c->input.kind = kind;
    c->input.d = params->d;
    c->input.g = params->g;
    if (params->has_b) c->input.b = params->b;
    c->input.ci = params->ci != 0;
    c->input.seed = params->seed;
    c->input.characteristic = p;
    c->input.certificates = bundle.certificates;
    c->input.notices.push_back("attempts: " + std::to_string(bundle.attempts));
    *out = c;
  });
}

cl_status cl_curve_from_ideal(const cl_ideal* ideal, uint64_t seed, cl_curve** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    const auto dd = dimension_degree(ideal->ideal);
    if (dd.proj_dim != 1) fail(ErrorKind::NotACurve, "ideal does not define a curve (projective dimension " +
                                                         std::to_string(dd.proj_dim) + ")");
    ReportInput in;
    in.source = "analyze";
    in.seed = seed;
    in.characteristic = ideal->ideal.ring()->field.characteristic();
    Ideal I = ideal->ideal;
    const Ideal sat = saturate(I);
    if (sat != I) {
      in.notices.push_back("input was not saturated; analyzed its saturation");
      I = sat.minimalized();
    }
    *out = new cl_curve{I, in};
  });
}

cl_status cl_curve_ideal(const cl_curve* curve, cl_ideal** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    *out = new cl_ideal{curve->ideal};
  });
}

cl_status cl_curve_report(const cl_curve* curve, char** json, int* all_pass) {
  return guarded([&] {
    require(curve, "curve");
    require(json, "json");
    const CurveInvariants inv(curve->ideal);
    SeededRng rng = SeededRng(curve->input.seed).fork(0xc1a55);
    const auto cls = classify(inv, rng);
    const auto rep = build_report(inv, cls, curve->input);
    *json = dup(rep.doc.dump(2));
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
  });
}

void cl_curve_free(cl_curve* curve) { delete curve; }

cl_status cl_formulas(int d, int g, int has_b, int b, char** json) {
  return guarded([&] {
    require(json, "json");
    const auto n = CurveNumerics::make(d, g, has_b ? std::optional<int>(b) : std::nullopt);
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["d"] = d;
    doc["g"] = g;
    doc["r"] = n.r;
    doc["a_extremal"] = n.a_ext;
    auto notices = nlohmann::ordered_json::array();
    const int span = static_cast<int>(binomial(d - 1, 2)) - g + d + 2;
    if (d >= 3 && n.a_ext >= 0) doc["rho_E"] = table(-span, span, [&](int j) { return rho_extremal(n, j); });
    if (d >= 5) doc["rho_SE"] = table(-span, span, [&](int j) { return rho_subextremal(n, j); });
    else notices.push_back("rho_SE needs d >= 5");
    if (d < 7) {
      notices.push_back("curves of subextremal type need d >= 7; SET rows suppressed");
    } else if (n.r < 1) {
      notices.push_back("r < 1: curves of subextremal type with these numerics are ACM; SET rows suppressed");
    } else {
      auto rows = nlohmann::ordered_json::array();
      for (int bb = 0; bb <= CurveNumerics::max_b(n.r); ++bb) {
        if (has_b && bb != b) continue;
        const auto nb = CurveNumerics::make(d, g, bb);
        nlohmann::ordered_json row;
        row["b"] = bb;
        row["ci_admissible"] = nb.ci_admissible();
        row["rho_b"] = table(-span, span, [&](int j) { return rho_b(nb, j); });
        row["h_b"] = table(0, n.r + 1, [&](int j) { return h_b(n.r, bb, j); });
        row["hilbert"] = table(0, d + n.r, [&](int j) { return expected_hilbert(nb, j).h_c; });
        row["h2"] = table(-d, d + n.r, [&](int j) { return expected_hilbert(nb, j).h2; });
        row["gamma"] = table(0, d + n.r, [&](int j) { return expected_hilbert(nb, j).gamma; });
        auto betti = [&](BettiCase c) {
          auto a = nlohmann::ordered_json::array();
          for (const auto& [k, v] : expected_betti(nb, c).entries()) a.push_back({k.first, k.second, v});
          return a;
        };
        row["betti"] = betti(bb == 0 ? BettiCase::Subextremal : BettiCase::SetGeneral);
        if (nb.ci_admissible()) row["betti_ci"] = betti(BettiCase::SetCompleteIntersection);
        rows.push_back(row);
      }
      doc["set"] = rows;
      if (n.r >= 3) {
        const auto f = family_dimensions(n);
        doc["families"] = {{"dim_extremal", f.dim_extremal},
                           {"dim_extremal_closed", f.dim_extremal_closed},
                           {"dim_F_SE", f.dim_F_SE},
                           {"dim_F_SET2", f.dim_F_SET2},
                           {"dim_SE_closed", f.dim_SE_closed},
                           {"dim_in_fixed_double_plane", f.dim_in_fixed_double_plane},
                           {"dim_SET0_double_planes", f.dim_SET0_double_planes},
                           {"delta_gamma", f.delta_gamma},
                           {"epsilon", f.epsilon},
                           {"hom_MM", f.hom_MM},
                           {"ext1_MM", f.ext1_MM},
                           {"t_gamma_rho", f.t_gamma_rho},
                           {"stratum_codims", f.stratum_codims}};
      } else {
        notices.push_back("family dimensions need r >= 3");
      }
    }
    doc["notices"] = notices;
    *json = dup(doc.dump(2));
  });
}

cl_status cl_verify(const char* suite, int d_lo, int d_hi, int has_g, int g_lo, int g_hi, uint64_t seed,
                    uint32_t characteristic, char** json, int64_t* failures) {
  return guarded([&] {
    require(suite, "suite");
    require(json, "json");
    const Coeff p = characteristic_or_default(characteristic);
    Grid grid{d_lo, d_hi, std::nullopt, std::nullopt};
    if (has_g) grid.g_lo = g_lo, grid.g_hi = g_hi;
    if (d_lo > d_hi) fail(ErrorKind::InvalidArgument, "empty degree range");
    const std::string name = suite;
    SuiteResult r;
    if (name == "formulas") {
      if (d_lo < 7) fail(ErrorKind::InvalidArgument, "formula suite needs d >= 7");
      r = formula_suite(grid);
    } else if (name == "paper") {
      if (d_lo < 7) fail(ErrorKind::InvalidArgument, "paper suite needs d >= 7");
      r = paper_suite(grid, seed, p);
    } else if (name == "kernel") {
      r = kernel_suite(100, seed, p);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
    }
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["suite"] = r.name;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& [k, c] : r.counts) checks.push_back({{"check", k}, {"passed", c.first}, {"total", c.second}});
    doc["checks"] = checks;
    doc["failures"] = r.failures;
    doc["failed"] = r.failed();
    *json = dup(doc.dump(2));
    if (failures) *failures = r.failed();
  });
}

}  // extern "C"
