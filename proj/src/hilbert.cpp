#include "curvelab/hilbert.hpp"

#include <algorithm>

#include "curvelab/error.hpp"

namespace curvelab {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  __int128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<std::int64_t>(r);
}

namespace {

// Coefficient vector indexed by degree.
using Poly = std::vector<std::int64_t>;

void add_shifted(Poly& acc, const Poly& p, int shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

std::vector<Mon> minimalize(std::vector<Mon> g) {
  std::sort(g.begin(), g.end(), [](Mon a, Mon b) {
    const int da = mono::degree(a), db = mono::degree(b);
    return da != db ? da < db : a < b;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Mon> out;
  for (Mon m : g) {
    bool redundant = false;
    for (Mon k : out)
      if (mono::divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

bool is_pure_power(Mon m) {
  int nz = 0;
  for (int i = 0; i < mono::kMaxVars; ++i) nz += mono::exponent(m, i) > 0;
  return nz <= 1;
}

// Numerator of R / (gens) with R standard graded; gens must be minimal.
Poly series_numerator(const std::vector<Mon>& gens, int nvars) {
  if (gens.empty()) return {1};
  for (Mon m : gens)
    if (mono::degree(m) == 0) return {};

  // Count occurrences of each variable.
  std::vector<int> count(nvars, 0);
  for (Mon m : gens)
    for (int v = 0; v < nvars; ++v) count[v] += mono::exponent(m, v) > 0;
  int pivot_var = -1;
  for (int v = 0; v < nvars; ++v)
    if (count[v] >= 2 && (pivot_var < 0 || count[v] > count[pivot_var])) pivot_var = v;

  if (pivot_var < 0) {
    // Pairwise coprime generators: product of (1 - t^deg).
    Poly out{1};
    for (Mon m : gens) {
      const int d = mono::degree(m);
      Poly next(out.size() + d, 0);
      for (std::size_t i = 0; i < out.size(); ++i) {
        next[i] += out[i];
        next[i + d] -= out[i];
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<int> exps;
  for (Mon m : gens) {
    const int e = mono::exponent(m, pivot_var);
    if (e > 0 && !is_pure_power(m)) exps.push_back(e);
  }
  if (exps.empty()) {
    // Only the pure power carries the pivot variable; pick another shared one.
    for (Mon m : gens)
      if (mono::exponent(m, pivot_var) > 0) exps.push_back(mono::exponent(m, pivot_var));
  }
  std::sort(exps.begin(), exps.end());
  const int e = exps[exps.size() / 2];
  const Mon pivot = mono::with_exponent(0, pivot_var, e);

  // N(M) = N(M + (p)) + t^e N(M : p)
  std::vector<Mon> plus{pivot};
  std::vector<Mon> colon;
  for (Mon m : gens) {
    if (!mono::divides(pivot, m)) plus.push_back(m);
    const int em = mono::exponent(m, pivot_var);
    colon.push_back(mono::with_exponent(m, pivot_var, em > e ? em - e : 0));
  }
  Poly out = series_numerator(minimalize(plus), nvars);
  add_shifted(out, series_numerator(minimalize(colon), nvars), e);
  return out;
}

}  // namespace

HilbertSeries HilbertSeries::of_monomial_module(const std::vector<Mon>& leads, int nvars,
                                                const std::vector<int>& component_degrees) {
  std::vector<std::vector<Mon>> by_comp(component_degrees.size());
  for (Mon m : leads) {
    const int c = mono::component(m);
    if (c >= static_cast<int>(by_comp.size()))
      fail(ErrorKind::InvalidArgument, "leading monomial in unknown component");
    by_comp[c].push_back(mono::exponents_only(m));
  }
  std::map<int, std::int64_t> num;
  for (std::size_t c = 0; c < by_comp.size(); ++c) {
    const Poly p = series_numerator(minimalize(by_comp[c]), nvars);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) num[static_cast<int>(i) + component_degrees[c]] += p[i];
  }
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  return HilbertSeries(nvars, std::move(num));
}

std::int64_t HilbertSeries::value(int j) const {
  std::int64_t total = 0;
  for (const auto& [k, c] : numerator_) {
    const int m = j - k;
    if (m < 0) continue;
    total += c * (nvars_ == 0 ? (m == 0 ? 1 : 0) : binomial(m + nvars_ - 1, nvars_ - 1));
  }
  return total;
}

std::map<int, std::int64_t> HilbertSeries::reduced(int& power) const {
  power = nvars_;
  std::map<int, std::int64_t> q = numerator_;
  while (power > 0 && !q.empty()) {
    std::int64_t at_one = 0;
    for (const auto& kv : q) at_one += kv.second;
    if (at_one != 0) break;
    // Divide by (1 - t): running sums from the lowest degree.
    std::map<int, std::int64_t> next;
    std::int64_t run = 0;
    const int lo = q.begin()->first, hi = q.rbegin()->first;
    for (int k = lo; k < hi; ++k) {
      auto it = q.find(k);
      if (it != q.end()) run += it->second;
      if (run != 0) next[k] = run;
    }
    q = std::move(next);
    --power;
  }
  return q;
}

int HilbertSeries::krull_dimension() const {
  if (numerator_.empty()) return -1;
  int power = 0;
  reduced(power);
  return power;
}

std::int64_t HilbertSeries::multiplicity() const {
  int power = 0;
  std::int64_t total = 0;
  for (const auto& kv : reduced(power)) total += kv.second;
  return total;
}

std::int64_t HilbertSeries::polynomial_value(int j) const {
  int power = 0;
  const auto q = reduced(power);
  if (power == 0) return 0;
  std::int64_t total = 0;
  for (const auto& [k, c] : q) total += c * binomial(j - k + power - 1, power - 1);
  return total;
}

int HilbertSeries::regularity_index() const {
  if (numerator_.empty()) return 0;
  const int lo = numerator_.begin()->first - 1;
  const int hi = numerator_.rbegin()->first;
  for (int j = hi; j >= lo; --j)
    if (value(j) != polynomial_value(j)) return j + 1;
  return lo;
}

}  // namespace curvelab
