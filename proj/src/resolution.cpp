#include "curvelab/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "curvelab/error.hpp"
#include "curvelab/linalg.hpp"

namespace curvelab {

GradedMap GradedMap::transpose() const {
  GradedMap t;
  t.ring = ring;
  for (int d : target_degrees) t.source_degrees.push_back(-d);
  for (int d : source_degrees) t.target_degrees.push_back(-d);
  std::vector<std::vector<Term>> cols(rank_target());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& term : columns[c].terms()) {
      const int r = mono::component(term.mon);
      cols[r].push_back({mono::with_component(term.mon, static_cast<int>(c)), term.coeff});
    }
  for (auto& ts : cols) t.columns.push_back(Polynomial::from_terms(ring, std::move(ts)));
  return t;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  if (other.rank_target() != rank_source()) fail(ErrorKind::InvalidArgument, "composition of incompatible maps");
  GradedMap out;
  out.ring = ring;
  out.source_degrees = other.source_degrees;
  out.target_degrees = target_degrees;
  for (const auto& col : other.columns) {
    Polynomial acc(ring);
    for (std::size_t r = 0; r < rank_source(); ++r) {
      const Polynomial e = col.component(static_cast<int>(r));
      if (!e.is_zero()) acc = acc + e * columns[r];
    }
    out.columns.push_back(acc);
  }
  return out;
}

GroebnerBasis syzygy_module(const GradedMap& map) {
  const int m = static_cast<int>(map.rank_target());
  const int n = static_cast<int>(map.rank_source());
  if (m + n > 255) fail(ErrorKind::ResourceLimit, "too many module components");
  std::vector<int> shifts = map.target_degrees;
  shifts.insert(shifts.end(), map.source_degrees.begin(), map.source_degrees.end());
  const auto order = MonomialOrder::position_over_term(map.ring->nvars(), shifts);
  std::vector<Polynomial> aug;
  for (int i = 0; i < n; ++i)
    aug.push_back(map.columns[i] + Polynomial::constant(map.ring, 1).in_component(m + i));
  auto gb = GroebnerBasis::compute(map.ring, aug, order);
  std::vector<Polynomial> syz;
  for (std::size_t k = 0; k < gb.size(); ++k)
    if (mono::component(gb.leading_monomials()[k]) >= m) syz.push_back(gb.elements()[k].shift_components(-m));
  return GroebnerBasis::from_elements(map.ring, syz,
                                      MonomialOrder::position_over_term(map.ring->nvars(), map.source_degrees));
}

std::vector<Polynomial> minimal_generators(const RingPtr& ring, const std::vector<Polynomial>& elems,
                                           const std::vector<int>& shifts) {
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& e : elems)
    if (!e.is_zero()) by_degree[e.graded_degree(shifts)].push_back(e);
  const auto order = MonomialOrder::degrevlex(ring->nvars(), shifts);
  const PrimeField& f = ring->field;
  std::vector<Polynomial> kept;
  for (auto& [deg, cands] : by_degree) {
    std::vector<Polynomial> rems;
    if (kept.empty()) {
      rems = cands;
    } else {
      auto gb = GroebnerBasis::compute(ring, kept, order, {deg});
      for (const auto& c : cands) {
        auto r = gb.reduce(c);
        if (!r.is_zero()) rems.push_back(std::move(r));
      }
    }
    if (rems.empty()) continue;
    // Independent combinations of the remainders.
    std::map<Mon, std::size_t> index;
    for (const auto& r : rems)
      for (const auto& t : r.terms()) index.emplace(t.mon, 0);
    std::vector<Mon> mons;
    for (auto& [mon, idx] : index) {
      idx = mons.size();
      mons.push_back(mon);
    }
    Matrix mat(rems.size(), mons.size());
    for (std::size_t i = 0; i < rems.size(); ++i)
      for (const auto& t : rems[i].terms()) mat.at(i, index[t.mon]) = t.coeff;
    const auto pivots = row_reduce(mat, f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::vector<Term> ts;
      for (std::size_t c = 0; c < mons.size(); ++c)
        if (mat.at(i, c)) ts.push_back({mons[c], mat.at(i, c)});
      kept.push_back(Polynomial::from_terms(ring, std::move(ts)));
    }
  }
  return kept;
}

int BettiTable::length() const {
  int len = 0;
  for (const auto& [k, v] : table_)
    if (v) len = std::max(len, k.first);
  return len;
}

std::vector<int> BettiTable::degrees(int i) const {
  std::vector<int> out;
  for (const auto& [k, v] : table_)
    if (k.first == i)
      for (int c = 0; c < v; ++c) out.push_back(k.second);
  return out;
}

std::string BettiTable::to_string() const {
  if (table_.empty()) return "";
  int lo = 1 << 20, hi = -(1 << 20);
  for (const auto& [k, v] : table_) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  const int len = length();
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= len; ++i) os << std::setw(5) << i;
  os << "\n";
  for (int row = lo; row <= hi; ++row) {
    os << std::setw(4) << row << ": ";
    for (int i = 0; i <= len; ++i) {
      const int v = get(i, i + row);
      if (v)
        os << std::setw(5) << v;
      else
        os << std::setw(5) << "-";
    }
    os << "\n";
  }
  return os.str();
}

BettiTable Resolution::betti() const {
  BettiTable b;
  b.add(0, 0);
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (int d : maps[i].source_degrees) b.add(static_cast<int>(i) + 1, d);
  return b;
}

Resolution minimal_free_resolution(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens) {
  Resolution res;
  res.ring = ring;
  auto gens = minimal_generators(ring, ideal_gens, {0});
  if (gens.empty()) return res;
  GradedMap map;
  map.ring = ring;
  map.target_degrees = {0};
  for (const auto& g : gens) map.source_degrees.push_back(g.graded_degree());
  map.columns = std::move(gens);
  while (true) {
    res.maps.push_back(map);
    if (static_cast<int>(res.maps.size()) > ring->nvars())
      fail(ErrorKind::InternalInconsistency, "resolution longer than the number of variables");
    auto syz = syzygy_module(map);
    if (syz.size() == 0) break;
    auto mins = minimal_generators(ring, syz.elements(), map.source_degrees);
    GradedMap next;
    next.ring = ring;
    next.target_degrees = map.source_degrees;
    for (const auto& g : mins) next.source_degrees.push_back(g.graded_degree(map.source_degrees));
    next.columns = std::move(mins);
    map = std::move(next);
  }
  return res;
}

HilbertSeries cokernel_series(const GradedMap& map) {
  const auto order = MonomialOrder::degrevlex(map.ring->nvars(), map.target_degrees);
  auto gb = GroebnerBasis::compute(map.ring, map.columns, order);
  return HilbertSeries::of_monomial_module(gb.leading_monomials(), map.ring->nvars(), map.target_degrees);
}

std::int64_t free_module_dimension(const std::vector<int>& degrees, int nvars, int e) {
  std::int64_t total = 0;
  for (int d : degrees)
    if (e - d >= 0) total += binomial(e - d + nvars - 1, nvars - 1);
  return total;
}

}  // namespace curvelab

namespace curvelab {

std::vector<Polynomial> syzygy_basis(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  GradedMap map;
  map.ring = gens.front().ring();
  map.target_degrees = {0};
  for (const auto& g : gens) {
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "syzygies of a zero generator");
    map.source_degrees.push_back(g.graded_degree());
  }
  map.columns = gens;
  return syzygy_module(map).elements();
}

PieceRank graded_piece_rank(const GradedMap& map, int e) {
  const int n = map.ring->nvars();
  PieceRank out;
  std::vector<Mon> target_basis;
  for (std::size_t c = 0; c < map.rank_target(); ++c)
    if (e - map.target_degrees[c] >= 0)
      for (Mon m : mono::all_of_degree(n, e - map.target_degrees[c]))
        target_basis.push_back(mono::with_component(m, static_cast<int>(c)));
  std::map<Mon, std::size_t> index;
  for (std::size_t i = 0; i < target_basis.size(); ++i) index[target_basis[i]] = i;
  std::vector<Polynomial> images;
  for (std::size_t c = 0; c < map.rank_source(); ++c)
    if (e - map.source_degrees[c] >= 0)
      for (Mon m : mono::all_of_degree(n, e - map.source_degrees[c]))
        images.push_back(map.columns[c].times_monomial(1, m));
  out.source_dim = images.size();
  out.target_dim = target_basis.size();
  Matrix mat(images.size(), target_basis.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& t : images[i].terms()) mat.at(i, index.at(t.mon)) = t.coeff;
  out.rank = rank(std::move(mat), map.ring->field);
  return out;
}

}  // namespace curvelab
