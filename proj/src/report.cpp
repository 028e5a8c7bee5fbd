#include "curvelab/report.hpp"

#include <algorithm>
#include <sstream>

#include "curvelab/closed_forms.hpp"
#include "curvelab/error.hpp"

namespace curvelab {

using nlohmann::ordered_json;

Ideal read_ideal_text(const std::string& text, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      gens.push_back(parse_polynomial(ring, line));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParseError) throw;
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ", " + e.what());
    }
    if (!gens.back().is_homogeneous())
      fail(ErrorKind::NotHomogeneous, "line " + std::to_string(lineno) + ": generator is not homogeneous");
  }
  if (gens.empty()) fail(ErrorKind::ParseError, "no generators");
  return Ideal(ring, gens);
}

std::string signed_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& F = f.field();
  const auto& names = f.ring()->names;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = F.to_signed(t.coeff);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    c = c < 0 ? -c : c;
    std::string mon;
    for (int v = 0; v < f.ring()->nvars(); ++v) {
      const int e = mono::exponent(t.mon, v);
      if (!e) continue;
      if (!mon.empty()) mon += "*";
      mon += names[v];
      if (e > 1) mon += "^" + std::to_string(e);
    }
    if (mon.empty()) os << c;
    else if (c == 1) os << mon;
    else os << c << "*" << mon;
    first = false;
  }
  return os.str();
}

std::string write_ideal_text(const Ideal& I, const std::string& header) {
  std::ostringstream os;
  if (!header.empty()) {
    std::istringstream in(header);
    std::string line;
    while (std::getline(in, line)) os << "# " << line << "\n";
  }
  for (const auto& g : I.generators()) os << signed_string(g) << "\n";
  return os.str();
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

ordered_json pairs(const DegreeTable& t) {
  ordered_json a = ordered_json::array();
  for (const auto& [j, v] : t) a.push_back({j, v});
  return a;
}

ordered_json betti_json(const BettiTable& b) {
  ordered_json a = ordered_json::array();
  for (const auto& [k, v] : b.entries()) a.push_back({k.first, k.second, v});
  return a;
}

// Adds computed/expected/diff tables and returns whether all diffs vanish.
bool compare(ordered_json& expected, ordered_json& diffs, const char* name, const DegreeTable& computed,
             const DegreeTable& reference) {
  DegreeTable diff;
  bool zero = true;
  for (const auto& [j, v] : reference) {
    const auto it = computed.find(j);
    const std::int64_t c = it == computed.end() ? 0 : it->second;
    diff[j] = c - v;
    zero = zero && c == v;
  }
  expected[name] = pairs(reference);
  diffs[name] = pairs(diff);
  return zero;
}

}  // namespace

Report build_report(const CurveInvariants& inv, const Classification& cls, const ReportInput& input) {
  Report rep;
  auto& doc = rep.doc;
  auto check = [&](const std::string& name, bool pass) { rep.checks.push_back({name, pass}); };
  const int d = static_cast<int>(inv.degree()), g = static_cast<int>(inv.genus());
  const auto n = CurveNumerics::make(d, g);

  doc["schema_version"] = kReportSchemaVersion;
  ordered_json in;
  in["source"] = input.source;
  if (input.kind) in["kind"] = *input.kind;
  if (input.d) in["d"] = *input.d;
  if (input.g) in["g"] = *input.g;
  if (input.b) in["b"] = *input.b;
  in["ci"] = input.ci;
  in["seed"] = input.seed;
  in["characteristic"] = input.characteristic;
  in["certificates"] = input.certificates;
  in["notices"] = input.notices;
  doc["input"] = in;
  for (const auto& c : input.certificates) check("certificate: " + c, true);

  ordered_json k;
  k["tag"] = cls.tag;
  k["label"] = cls.label();
  k["b"] = cls.b ? ordered_json(*cls.b) : ordered_json(nullptr);
  k["h0_I2"] = cls.h0_2;
  k["h0_I3"] = cls.h0_3;
  k["rao_max"] = cls.rao_max;
  k["rao_support"] = {cls.rao_lo, cls.rao_hi};
  if (cls.quadric) {
    ordered_json q;
    q["rank"] = cls.quadric->rank;
    q["reduced"] = cls.quadric->reduced;
    q["linear_factors"] = ordered_json::array();
    for (const auto& l : cls.quadric->linear_factors) q["linear_factors"].push_back(signed_string(l));
    k["quadric"] = q;
  }
  if (cls.plane) k["plane"] = signed_string(*cls.plane);
  k["section_diff"] = cls.section_diff;
  if (cls.structure) {
    const auto& s = *cls.structure;
    k["structure_conditions"] = {{"rao_plateau", s.rao_plateau}, {"quadric_cubic", s.quadric_cubic},
                                 {"section_profile", s.section_profile}, {"planar_residual", s.planar_residual}};
    check("structure conditions agree", s.all_equal());
  }
  if (cls.tail) {
    const auto& t = *cls.tail;
    k["tail_conditions"] = {{"subextremal", t.subextremal}, {"collinear", t.collinear}, {"b_zero", t.b_zero},
                            {"tail_positive", t.tail_positive}, {"rho_at_d_plus_r_minus_3", t.rho_at_d_r_3}};
    check("tail conditions agree", t.all_equal());
  }
  if (cls.residual) {
    const auto& r = *cls.residual;
    k["residual"] = {{"delta", r.delta},
                     {"g_prime", r.g_prime},
                     {"planar_degree", r.planar_degree},
                     {"deg_z", r.deg_z},
                     {"expected_deg_z", r.expected_deg_z},
                     {"z_in_c_prime_section", r.z_in_c_prime_section}};
    check("residual degree", r.deg_z == r.expected_deg_z);
    check("Z in C' cap H", r.z_in_c_prime_section);
    check("Z empty iff ACM", (r.deg_z == 0) == (cls.tag == "ACM"));
  }
  if (cls.b_matches_residual) check("b matches the residual scheme", *cls.b_matches_residual);
  doc["classification"] = k;

  ordered_json curve;
  curve["degree"] = d;
  curve["genus"] = g;
  std::vector<int> gen_degrees;
  for (const auto& p : inv.ideal().generators()) gen_degrees.push_back(p.degree());
  std::sort(gen_degrees.begin(), gen_degrees.end());
  curve["generator_degrees"] = gen_degrees;
  doc["curve"] = curve;

  DegreeTable rao, hilb, h2;
  for (int j = inv.table_lo(); j <= inv.table_hi(); ++j) {
    rao[j] = inv.h1(j);
    h2[j] = inv.h2(j);
  }
  const int top = d + static_cast<int>(std::max<std::int64_t>(cls.rao_max, 0));
  for (int j = 0; j <= top; ++j) hilb[j] = inv.hilbert(j);
  doc["rao"] = pairs(rao);
  doc["hilbert"] = pairs(hilb);
  doc["h2"] = pairs(h2);
  const auto table = inv.cohomology_table();
  check("Riemann-Roch at every tabulated degree", table.riemann_roch_holds(d, g));

  std::optional<BettiTable> betti;
  try {
    betti = inv.betti_table();
    check("resolution and Koszul Betti tables agree", true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalInconsistency) throw;
    check("resolution and Koszul Betti tables agree", false);
  }
  const BettiTable shown = betti ? *betti : inv.resolution_betti();
  doc["betti"] = betti_json(shown);

  const auto nc = inv.numerical_characters();
  DegreeTable gamma;
  for (int j = 0; j <= top; ++j) gamma[j] = nc.gamma.count(j) ? nc.gamma.at(j) : 0;
  doc["characters"] = {{"gamma", pairs(gamma)},
                       {"spectrum", pairs(nc.spectrum)},
                       {"sigma", pairs(nc.sigma)},
                       {"speciality_index", nc.speciality_index}};

  ordered_json expected = ordered_json::object(), diffs = ordered_json::object();
  auto reference = [&](auto f) {
    DegreeTable t;
    for (int j = inv.table_lo(); j <= inv.table_hi(); ++j) t[j] = f(j);
    return t;
  };
  if (cls.tag == "extremal") {
    check("rao equals rho_E", compare(expected, diffs, "rao", rao, reference([&](int j) { return rho_extremal(n, j); })));
  } else if (cls.tag == "subextremal" && !cls.b) {
    check("rao equals rho_SE",
          compare(expected, diffs, "rao", rao, reference([&](int j) { return rho_subextremal(n, j); })));
  } else if (cls.b) {
    const auto nb = CurveNumerics::make(d, g, *cls.b);
    check("rao equals rho_b", compare(expected, diffs, "rao", rao, reference([&](int j) { return rho_b(nb, j); })));
    DegreeTable eh, e2, eg, c2;
    for (int j = 0; j <= top; ++j) {
      const auto e = expected_hilbert(nb, j);
      eh[j] = e.h_c;
      e2[j] = e.h2;
      eg[j] = e.gamma;
      c2[j] = inv.h2(j);
    }
    check("hilbert function equals closed form", compare(expected, diffs, "hilbert", hilb, eh));
    check("h2 equals closed form", compare(expected, diffs, "h2", c2, e2));
    check("gamma equals closed form", compare(expected, diffs, "gamma", gamma, eg));
    expected["speciality_index"] = d - 5;
    diffs["speciality_index"] = nc.speciality_index - (d - 5);
    check("speciality index d - 5", nc.speciality_index == d - 5);
    DegreeTable sym;
    bool symmetric = true;
    for (int j = inv.table_lo(); j <= inv.table_hi(); ++j) symmetric = symmetric && inv.h1(j) == inv.h1(d - 2 - j);
    check("rao symmetric about (d - 2) / 2", symmetric);

    // Subextremal table for b = 0; otherwise the complete intersection case is read off Z.
    if (cls.quadric && !cls.quadric->reduced) {
      BettiCase bc = BettiCase::SetGeneral;
      if (*cls.b == 0) bc = BettiCase::Subextremal;
      else if (nb.ci_admissible() && cls.residual && cls.residual->z.minimalized().generators().size() == 2)
        bc = BettiCase::SetCompleteIntersection;
      const auto eb = expected_betti(nb, bc);
      expected["betti"] = betti_json(eb);
      check("betti table equals closed form", shown == eb);
    }
  }
  doc["expected"] = expected;
  doc["diffs"] = diffs;

  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  doc["checks"] = checks;
  doc["all_pass"] = rep.all_pass();
  return rep;
}

}  // namespace curvelab
