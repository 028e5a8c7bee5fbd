// Command-line front end. Talks to the library only through curvelab.h.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "curvelab.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0, kExitUsage = 2, kExitFailure = 3;

struct Range {
  int lo = 0, hi = 0;
};

std::optional<Range> parse_range(const std::string& s) {
  Range r;
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) return std::nullopt;
    } else {
      const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) return std::nullopt;
      r.hi = std::stoi(b, &used);
      if (used != b.size()) return std::nullopt;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (r.lo > r.hi) return std::nullopt;
  return r;
}

int exit_code(cl_status s) {
  switch (s) {
    case CL_OK: return kExitOk;
    case CL_ERR_INVALID_ARGUMENT:
    case CL_ERR_RING_MISMATCH:
    case CL_ERR_NOT_HOMOGENEOUS:
    case CL_ERR_PARSE:
    case CL_ERR_NOT_A_CURVE: return kExitUsage;
    default: return kExitFailure;
  }
}

int report_error(cl_status s) {
  std::cerr << "error (" << cl_status_name(s) << "): " << cl_last_error() << "\n";
  return exit_code(s);
}

struct Freer {
  void operator()(char* p) const { cl_string_free(p); }
  void operator()(cl_ideal* p) const { cl_ideal_free(p); }
  void operator()(cl_curve* p) const { cl_curve_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string ideal_path_for(const std::string& report_path) {
  const auto dot = report_path.rfind('.');
  const auto slash = report_path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return report_path + ".ideal";
  return report_path.substr(0, dot) + ".ideal";
}

void print_summary(const nlohmann::json& doc, std::ostream& os) {
  const auto& k = doc["classification"];
  os << "degree " << doc["curve"]["degree"] << ", genus " << doc["curve"]["genus"] << ", classification "
     << k["label"].get<std::string>() << "\n";
  os << "generator degrees:";
  for (const auto& d : doc["curve"]["generator_degrees"]) os << " " << d;
  os << "\n";
  int failed = 0;
  for (const auto& c : doc["checks"])
    if (!c["pass"].get<bool>()) {
      os << "FAIL " << c["name"].get<std::string>() << "\n";
      ++failed;
    }
  os << doc["checks"].size() - failed << "/" << doc["checks"].size() << " checks pass\n";
}

// Values of a [j, v] table over its support, with one zero on each side.
std::string support_row(const nlohmann::json& t, std::optional<int> from = std::nullopt) {
  int lo = 0, hi = -1;
  for (const auto& p : t) {
    const int j = p[0], v = p[1];
    if (v == 0) continue;
    if (hi < lo) lo = j;
    hi = j;
  }
  if (hi < lo) return "identically 0";
  if (from) lo = *from;
  else --lo;
  ++hi;
  std::ostringstream os;
  os << "j = " << lo << ".." << hi << ":";
  for (const auto& p : t) {
    const int j = p[0];
    if (j >= lo && j <= hi) os << " " << p[1].get<long long>();
  }
  return os.str();
}

int print_formulas(const nlohmann::json& doc) {
  std::cout << "d = " << doc["d"] << ", g = " << doc["g"] << ", r = " << doc["r"] << ", a = " << doc["a_extremal"]
            << "\n";
  if (doc.contains("rho_E")) std::cout << "rho_E   " << support_row(doc["rho_E"]) << "\n";
  if (doc.contains("rho_SE")) std::cout << "rho_SE  " << support_row(doc["rho_SE"]) << "\n";
  if (doc.contains("set"))
    for (const auto& row : doc["set"]) {
      std::cout << "b = " << row["b"] << (row["ci_admissible"].get<bool>() ? " (complete intersection admissible)" : "")
                << "\n";
      std::cout << "  rho_b   " << support_row(row["rho_b"], 1) << "\n";
      std::cout << "  h_b     " << support_row(row["h_b"], 0) << "\n";
      std::cout << "  betti  ";
      for (const auto& e : row["betti"]) std::cout << " F" << e[0] << ":" << e[1] << (e[2] > 1 ? "^" + e[2].dump() : "");
      std::cout << "\n";
    }
  if (doc.contains("families"))
    for (const auto& [k, v] : doc["families"].items()) std::cout << k << " = " << v.dump() << "\n";
  for (const auto& n : doc["notices"]) std::cout << "note: " << n.get<std::string>() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and analyze extremal, subextremal and subextremal-type space curves"};
  app.require_subcommand(1);
  std::uint32_t characteristic = 0;
  app.add_option("--char", characteristic, "prime characteristic (default: CURVELAB_CHAR or 32003)");

  auto* construct = app.add_subcommand("construct", "build a curve and write its ideal and report");
  std::string kind, out_path;
  int d = 0, g = 0, b = 0;
  bool ci = false;
  std::uint64_t seed = 1;
  construct->add_option("--kind", kind, "set, extremal or subextremal")->required();
  construct->add_option("--d", d, "degree")->required();
  construct->add_option("--g", g, "arithmetic genus")->required();
  auto* b_opt = construct->add_option("--b", b, "type b (set curves)");
  construct->add_flag("--ci", ci, "complete intersection point scheme (r even, b = r/2 - 1)");
  construct->add_option("--seed", seed, "random seed");
  construct->add_option("--out", out_path, "report path; the ideal goes next to it with extension .ideal");
  construct->add_option("--char", characteristic, "prime characteristic");

  auto* analyze = app.add_subcommand("analyze", "full invariant report of an ideal file");
  std::string in_path;
  analyze->add_option("file", in_path, "ideal file")->required();
  analyze->add_option("--seed", seed, "seed for plane sampling");
  analyze->add_option("--out", out_path, "write the JSON report here instead of stdout");
  analyze->add_option("--char", characteristic, "prime characteristic");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "formulas", d_range = "7", g_range;
  verify->add_option("--suite", suite, "formulas, paper or kernel");
  verify->add_option("--d", d_range, "degree or range lo..hi");
  verify->add_option("--g", g_range, "genus or range lo..hi (default: -30 .. C(d-3,2) - 2)");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--char", characteristic, "prime characteristic");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "print the JSON summary");

  auto* formulas = app.add_subcommand("formulas", "closed-form tables for given numerics");
  formulas->add_option("--d", d, "degree")->required();
  formulas->add_option("--g", g, "arithmetic genus")->required();
  auto* fb_opt = formulas->add_option("--b", b, "type b");
  bool formulas_json = false;
  formulas->add_flag("--json", formulas_json, "print JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*construct) {
    cl_construct_params p{kind.c_str(), d, g, b, b_opt->count() > 0, ci ? 1 : 0, seed, characteristic};
    cl_curve* raw = nullptr;
    if (auto s = cl_construct(&p, &raw); s != CL_OK) return report_error(s);
    Owned<cl_curve> curve(raw);
    char* json_raw = nullptr;
    int all_pass = 0;
    if (auto s = cl_curve_report(curve.get(), &json_raw, &all_pass); s != CL_OK) return report_error(s);
    Owned<char> json(json_raw);
    cl_ideal* ideal_raw = nullptr;
    if (auto s = cl_curve_ideal(curve.get(), &ideal_raw); s != CL_OK) return report_error(s);
    Owned<cl_ideal> ideal(ideal_raw);
    std::ostringstream header;
    header << "construct --kind " << kind << " --d " << d << " --g " << g;
    if (b_opt->count()) header << " --b " << b;
    if (ci) header << " --ci";
    header << " --seed " << seed;
    char* text_raw = nullptr;
    if (auto s = cl_ideal_text(ideal.get(), header.str().c_str(), &text_raw); s != CL_OK) return report_error(s);
    Owned<char> text(text_raw);
    const auto doc = nlohmann::json::parse(json.get());
    if (out_path.empty()) {
      std::cout << json.get() << "\n";
    } else {
      const std::string ideal_path = ideal_path_for(out_path);
      if (!write_file(out_path, std::string(json.get()) + "\n") || !write_file(ideal_path, text.get())) {
        std::cerr << "error: cannot write " << out_path << " or " << ideal_path << "\n";
        return kExitUsage;
      }
      print_summary(doc, std::cout);
      std::cout << "wrote " << out_path << " and " << ideal_path << "\n";
    }
    // Construction certificates decide the exit code; report checks are informational here.
    return kExitOk;
  }

  if (*analyze) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << in_path << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    cl_ideal* ideal_raw = nullptr;
    if (auto s = cl_ideal_parse(buf.str().c_str(), characteristic, &ideal_raw); s != CL_OK) return report_error(s);
    Owned<cl_ideal> ideal(ideal_raw);
    cl_curve* curve_raw = nullptr;
    if (auto s = cl_curve_from_ideal(ideal.get(), seed, &curve_raw); s != CL_OK) return report_error(s);
    Owned<cl_curve> curve(curve_raw);
    char* json_raw = nullptr;
    int all_pass = 0;
    if (auto s = cl_curve_report(curve.get(), &json_raw, &all_pass); s != CL_OK) return report_error(s);
    Owned<char> json(json_raw);
    const auto doc = nlohmann::json::parse(json.get());
    for (const auto& n : doc["input"]["notices"]) std::cerr << "note: " << n.get<std::string>() << "\n";
    if (out_path.empty()) {
      std::cout << json.get() << "\n";
    } else {
      if (!write_file(out_path, std::string(json.get()) + "\n")) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
      }
      print_summary(doc, std::cout);
    }
    return all_pass ? kExitOk : kExitFailure;
  }

  if (*verify) {
    const auto dr = parse_range(d_range);
    std::optional<Range> gr;
    if (!g_range.empty()) gr = parse_range(g_range);
    if (!dr || (!g_range.empty() && !gr)) {
      std::cerr << "error: ranges look like 7 or 7..12\n";
      return kExitUsage;
    }
    char* json_raw = nullptr;
    std::int64_t failures = 0;
    if (auto s = cl_verify(suite.c_str(), dr->lo, dr->hi, gr ? 1 : 0, gr ? gr->lo : 0, gr ? gr->hi : 0, seed,
                           characteristic, &json_raw, &failures);
        s != CL_OK)
      return report_error(s);
    Owned<char> json(json_raw);
    if (verify_json) {
      std::cout << json.get() << "\n";
    } else {
      const auto doc = nlohmann::json::parse(json.get());
      for (const auto& c : doc["checks"])
        std::cout << c["passed"] << "/" << c["total"] << "  " << c["check"].get<std::string>() << "\n";
      for (const auto& f : doc["failures"]) std::cout << "FAIL " << f.get<std::string>() << "\n";
      std::cout << "suite " << suite << ": " << failures << " failure(s)\n";
    }
    return failures == 0 ? kExitOk : kExitFailure;
  }

  if (*formulas) {
    char* json_raw = nullptr;
    if (auto s = cl_formulas(d, g, fb_opt->count() > 0, b, &json_raw); s != CL_OK) return report_error(s);
    Owned<char> json(json_raw);
    if (formulas_json) {
      std::cout << json.get() << "\n";
      return kExitOk;
    }
    return print_formulas(nlohmann::json::parse(json.get()));
  }
  return kExitUsage;
}
