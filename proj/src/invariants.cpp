#include "curvelab/invariants.hpp"

#include <algorithm>
#include <array>

#include "curvelab/error.hpp"
#include "curvelab/linalg.hpp"

namespace curvelab {

DegreeTable difference(const DegreeTable& f, int lo, int hi) {
  auto get = [&](int j) {
    auto it = f.find(j);
    return it == f.end() ? std::int64_t{0} : it->second;
  };
  DegreeTable out;
  for (int j = lo; j <= hi; ++j) out[j] = get(j) - get(j - 1);
  return out;
}

bool CohomologyTable::riemann_roch_holds(std::int64_t d, std::int64_t g) const {
  for (const auto& row : rows) {
    if (row.j < -3) continue;
    const std::int64_t lhs = row.h0 - row.h1 + (d * row.j - g + 1 + row.h2);
    if (lhs != binomial(row.j + 3, 3)) return false;
  }
  return true;
}

CurveInvariants::CurveInvariants(const Ideal& I) : ideal_(I) {
  if (I.ring()->nvars() != 4) fail(ErrorKind::RingMismatch, "curve ideals live in k[x,y,z,t]");
  const auto dd = dimension_degree(I);
  if (dd.proj_dim != 1) fail(ErrorKind::NotACurve, "ideal does not define a curve");
  degree_ = dd.degree;
  genus_ = *dd.genus;
  hs_ = I.hilbert_series();
  res_ = minimal_free_resolution(I.ring(), I.generators());
  if (res_.length() > 3) fail(ErrorKind::InvalidArgument, "curve ideal is not saturated");
  if (res_.length() < 2) fail(ErrorKind::NotACurve, "ideal is principal");
  coker2_ = cokernel_series(res_.maps[1].transpose());
  std::int64_t r = 0;
  if (res_.length() == 3) {
    const GradedMap t3 = res_.maps[2].transpose();
    f3_dual_degrees_ = t3.target_degrees;
    ext3_ = cokernel_series(t3);
    const auto& num = ext3_->numerator();
    if (!num.empty())
      for (int e = num.begin()->first; e <= num.rbegin()->first; ++e) r = std::max(r, ext3_->value(e));
  }
  const int span = static_cast<int>(degree_ + (r > 0 ? r : degree_));
  lo_ = -span;
  hi_ = 2 * span;
}

std::int64_t CurveInvariants::h1(int j) const { return ext3_ ? ext3_->value(-j - 4) : 0; }

std::int64_t CurveInvariants::h2(int j) const {
  const int e = -j - 4;
  return coker2_->value(e) - free_module_dimension(f3_dual_degrees_, 4, e) + (ext3_ ? ext3_->value(e) : 0);
}

BettiTable CurveInvariants::resolution_betti() const {
  BettiTable out;
  for (const auto& [k, v] : res_.betti().entries())
    if (k.first >= 1) out.add(k.first - 1, k.second, v);
  return out;
}

BettiTable CurveInvariants::betti_table() const {
  const BettiTable from_res = resolution_betti();
  int top = 0;
  for (const auto& [k, v] : from_res.entries()) top = std::max(top, k.second);
  for (const auto& g : ideal_.groebner().elements()) top = std::max(top, g.graded_degree());
  SeededRng rng(0x5eed0000ULL + static_cast<std::uint64_t>(degree_));
  const BettiTable from_tor = koszul_betti(ideal_, rng, top + 3);
  if (!(from_res == from_tor))
    fail(ErrorKind::InternalInconsistency,
         "Betti numbers from the resolution and from Koszul homology disagree:\n" + from_res.to_string() +
             "vs\n" + from_tor.to_string());
  return from_res;
}

HilbertData CurveInvariants::hilbert_data(int cap) const {
  HilbertData h;
  h.cap = cap;
  for (int j = 0; j <= cap; ++j) h.values.push_back(hilbert(j));
  h.degree = degree_;
  h.genus = genus_;
  int s = cap + 1;
  while (s > 0 && hilbert(s - 1) == degree_ * (s - 1) + 1 - genus_) --s;
  h.stabilization = std::max(s, hs_.regularity_index());
  return h;
}

CohomologyTable CurveInvariants::cohomology_table(int lo, int hi) const {
  CohomologyTable t;
  t.lo = lo;
  t.hi = hi;
  for (int j = lo; j <= hi; ++j) t.rows.push_back({j, h0(j), h1(j), h2(j)});
  return t;
}

RaoProfile CurveInvariants::rao() const {
  RaoProfile p;
  for (int j = lo_; j <= hi_; ++j) {
    const auto v = h1(j);
    if (!v) continue;
    p.values[j] = v;
    if (p.support_hi < p.support_lo) p.support_lo = j;
    p.support_hi = j;
    p.max = std::max(p.max, v);
  }
  if (p.values.empty()) p.support_lo = 0, p.support_hi = -1;
  return p;
}

NumericalCharacters CurveInvariants::numerical_characters() const {
  NumericalCharacters nc;
  DegreeTable h;
  for (int j = lo_ - 3; j <= hi_; ++j) {
    h[j] = hilbert(j);
    nc.h0_oc[j] = hilbert(j) + h1(j);
  }
  auto d1 = difference(h, lo_ - 2, hi_);
  auto d2 = difference(d1, lo_ - 1, hi_);
  auto d3 = difference(d2, lo_, hi_);
  for (auto& [j, v] : d3) nc.gamma[j] = -v;
  auto s1 = difference(nc.h0_oc, lo_ - 2, hi_);
  nc.spectrum = difference(s1, lo_ - 1, hi_);
  nc.sigma = difference(nc.spectrum, lo_, hi_);
  nc.spectrum.erase(lo_ - 1);
  for (int j = lo_ - 3; j < lo_; ++j) nc.h0_oc.erase(j);
  nc.speciality_index = lo_ - 1;
  for (int j = lo_; j <= hi_; ++j)
    if (h2(j) != 0) nc.speciality_index = j;
  return nc;
}

namespace {

// Images of ring variables for the substitution x -> a y + b z + c t.
std::vector<Polynomial> plane_substitution(const RingPtr& S, SeededRng& rng) {
  const PrimeField& f = S->field;
  std::vector<Polynomial> img;
  Polynomial lin(S);
  for (int v = 0; v < 3; ++v) lin = lin + Polynomial::variable(S, v).scaled(rng.coeff(f));
  img.push_back(lin);
  for (int v = 0; v < 3; ++v) img.push_back(Polynomial::variable(S, v));
  return img;
}

}  // namespace

BettiTable koszul_betti(const Ideal& I, SeededRng& rng, int max_degree) {
  const RingPtr S = plane_ring(I.ring()->field.characteristic());
  const Ideal J = I.substitute(plane_substitution(S, rng), S);
  const auto& gb = J.groebner();
  const PrimeField& f = S->field;

  // Standard monomials of A = S / J per degree.
  const int top = max_degree + 1;
  std::vector<std::vector<Mon>> basis(top + 1);
  std::vector<std::map<Mon, std::size_t>> index(top + 1);
  for (int j = 0; j <= top; ++j) {
    for (Mon m : mono::all_of_degree(3, j)) {
      bool standard = true;
      for (Mon l : gb.leading_monomials()) standard = standard && !mono::divides(l, m);
      if (standard) {
        index[j][m] = basis[j].size();
        basis[j].push_back(m);
      }
    }
  }
  // The reduction is a regular section: h_A = first difference of h_C.
  const auto hs = I.hilbert_series();
  for (int j = 0; j <= top; ++j)
    if (static_cast<std::int64_t>(basis[j].size()) != hs.value(j) - (j ? hs.value(j - 1) : 0))
      fail(ErrorKind::InternalInconsistency, "random linear form is a zero divisor on R/I");

  // mult[j][k][i]: normal form of x_k * basis[j][i] as a dense vector in A_{j+1}.
  std::vector<std::array<std::vector<std::vector<Coeff>>, 3>> mult(top);
  for (int j = 0; j < top; ++j)
    for (int k = 0; k < 3; ++k)
      for (Mon m : basis[j]) {
        std::vector<Coeff> v(basis[j + 1].size(), 0);
        const auto nf = gb.size() ? gb.reduce(Polynomial::monomial(S, 1, mono::mul(m, mono::variable(k))))
                                  : Polynomial::monomial(S, 1, mono::mul(m, mono::variable(k)));
        for (const auto& t : nf.terms()) v[index[j + 1].at(t.mon)] = t.coeff;
        mult[j][k].push_back(std::move(v));
      }

  std::vector<std::vector<int>> subsets(4);
  for (int s = 0; s < 8; ++s) subsets[__builtin_popcount(s)].push_back(s);

  // Rank of the Koszul differential K_i -> K_{i-1} in internal degree j.
  auto koszul_rank = [&](int i, int j) -> std::size_t {
    if (i < 1 || i > 3 || j - i < 0 || j - i + 1 > top) return 0;
    const int src_deg = j - i;
    const std::size_t src_block = basis[src_deg].size(), tgt_block = basis[src_deg + 1].size();
    if (src_block == 0 || tgt_block == 0) return 0;
    const auto& src_sets = subsets[i];
    const auto& tgt_sets = subsets[i - 1];
    Matrix m(src_sets.size() * src_block, tgt_sets.size() * tgt_block);
    for (std::size_t a = 0; a < src_sets.size(); ++a) {
      const int s = src_sets[a];
      int sign_pos = 0;
      for (int k = 0; k < 3; ++k) {
        if (!(s & (1 << k))) continue;
        const int rest = s & ~(1 << k);
        const std::size_t b = std::find(tgt_sets.begin(), tgt_sets.end(), rest) - tgt_sets.begin();
        const bool negative = sign_pos % 2 == 1;
        for (std::size_t r = 0; r < src_block; ++r) {
          const auto& v = mult[src_deg][k][r];
          for (std::size_t c = 0; c < tgt_block; ++c)
            if (v[c]) m.at(a * src_block + r, b * tgt_block + c) = negative ? f.neg(v[c]) : v[c];
        }
        ++sign_pos;
      }
    }
    return rank(std::move(m), f);
  };

  BettiTable out;
  for (int j = 0; j <= max_degree; ++j)
    for (int i = 1; i <= 3; ++i) {
      if (j - i < 0) continue;
      const std::int64_t dim_k = static_cast<std::int64_t>(subsets[i].size() * basis[j - i].size());
      const std::int64_t tor = dim_k - static_cast<std::int64_t>(koszul_rank(i, j)) -
                               static_cast<std::int64_t>(koszul_rank(i + 1, j));
      if (tor) out.add(i - 1, j, static_cast<int>(tor));
    }
  return out;
}

std::vector<std::int64_t> hyperplane_section_diff(const Ideal& I, SeededRng& rng, int samples) {
  const auto dd = dimension_degree(I);
  if (dd.proj_dim != 1) fail(ErrorKind::NotACurve, "hyperplane section of a non-curve");
  const RingPtr S = plane_ring(I.ring()->field.characteristic());
  std::vector<std::int64_t> best;
  int valid = 0;
  for (int s = 0; s < samples; ++s) {
    const Ideal J = saturate(I.substitute(plane_substitution(S, rng), S));
    const auto sec = dimension_degree(J);
    if (sec.proj_dim != 0 || sec.degree != dd.degree) continue;
    ++valid;
    const auto hs = J.hilbert_series();
    std::vector<std::int64_t> diff;
    std::int64_t prev = 0;
    for (int j = 0;; ++j) {
      const auto v = hs.value(j);
      diff.push_back(v - prev);
      prev = v;
      if (v == dd.degree && diff.back() == 0) break;
    }
    if (best.size() < diff.size()) best.resize(diff.size(), 0);
    for (std::size_t j = 0; j < diff.size(); ++j) best[j] = std::max(best[j], diff[j]);
  }
  if (!valid) fail(ErrorKind::ConstructionFailure, "every sampled plane section was degenerate");
  return best;
}

}  // namespace curvelab
