#include "curvelab/ideal.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "curvelab/error.hpp"
#include "curvelab/linalg.hpp"
#include "curvelab/resolution.hpp"

namespace curvelab {

Coeff SeededRng::coeff(const PrimeField& f, bool nonzero) {
  const std::uint64_t p = f.characteristic();
  if (nonzero) return static_cast<Coeff>(1 + next() % (p - 1));
  return static_cast<Coeff>(next() % p);
}

SeededRng SeededRng::fork(std::uint64_t label) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(label), static_cast<std::uint32_t>(label >> 32)};
  std::uint64_t out = 0;
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return SeededRng(out);
}

struct Ideal::Cache {
  std::once_flag gb_once;
  GroebnerBasis gb;
  std::once_flag hs_once;
  std::optional<HilbertSeries> hs;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) fail(ErrorKind::RingMismatch, "generator in a different ring");
    if (g.max_component() > 0) fail(ErrorKind::InvalidArgument, "ideal generators must be ring elements");
    if (!g.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "ideal generator not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (int i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, v);
}

const GroebnerBasis& Ideal::groebner() const {
  if (!cache_) fail(ErrorKind::InvalidArgument, "empty ideal handle");
  std::call_once(cache_->gb_once, [this] {
    cache_->gb = GroebnerBasis::compute(ring_, gens_, MonomialOrder::degrevlex(ring_->nvars()));
  });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (groebner().size() == 0) return false;
  return groebner().contains(f);
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.elements().front().is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::operator==(const Ideal& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return groebner().elements() == o.groebner().elements();
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (!same_ring(ring_, o.ring_)) fail(ErrorKind::RingMismatch, "sum of ideals in different rings");
  auto g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, g);
}

Ideal Ideal::operator*(const Ideal& o) const {
  if (!same_ring(ring_, o.ring_)) fail(ErrorKind::RingMismatch, "product of ideals in different rings");
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(a * b);
  return Ideal(ring_, g);
}

Ideal Ideal::times(const Polynomial& f) const {
  std::vector<Polynomial> g;
  for (const auto& a : gens_) g.push_back(a * f);
  return Ideal(ring_, g);
}

HilbertSeries Ideal::hilbert_series() const {
  const auto& gb = groebner();
  std::call_once(cache_->hs_once, [&] {
    cache_->hs = HilbertSeries::of_monomial_ideal(gb.leading_monomials(), ring_->nvars());
  });
  return *cache_->hs;
}

std::int64_t Ideal::dim_in_degree(int j) const {
  if (j < 0) return 0;
  const int n = ring_->nvars();
  return binomial(j + n - 1, n - 1) - hilbert_function(j);
}

std::vector<Polynomial> Ideal::graded_piece(int j) const {
  std::vector<Polynomial> spans;
  for (const auto& g : groebner().elements()) {
    const int d = g.graded_degree();
    if (d > j) continue;
    for (Mon m : mono::all_of_degree(ring_->nvars(), j - d)) spans.push_back(g.times_monomial(1, m));
  }
  if (spans.empty()) return {};
  std::vector<Mon> basis = mono::all_of_degree(ring_->nvars(), j);
  std::sort(basis.begin(), basis.end(), [n = ring_->nvars()](Mon a, Mon b) {
    return canonical_key(a, n) > canonical_key(b, n);
  });
  std::map<Mon, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Matrix mat(spans.size(), basis.size());
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (const auto& t : spans[i].terms()) mat.at(i, index.at(t.mon)) = t.coeff;
  const auto pivots = row_reduce(mat, ring_->field);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Term> ts;
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (mat.at(i, c)) ts.push_back({basis[c], mat.at(i, c)});
    out.push_back(Polynomial::from_terms(ring_, std::move(ts)));
  }
  return out;
}

Ideal Ideal::minimalized() const { return Ideal(ring_, minimal_generators(ring_, gens_, {0})); }

Ideal Ideal::truncated_generators(int j) const {
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    if (a.graded_degree() <= j) g.push_back(a);
  return Ideal(ring_, g);
}

Ideal Ideal::substitute(const std::vector<Polynomial>& images, const RingPtr& target) const {
  std::vector<Polynomial> g;
  for (const auto& a : gens_) g.push_back(a.substitute(images, target));
  return Ideal(target, g);
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ")";
  return os.str();
}

Ideal quotient_by(const Ideal& I, const Polynomial& f) {
  const RingPtr& R = I.ring();
  if (f.is_zero()) return Ideal::unit(R);
  if (!f.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "quotient by an inhomogeneous form");
  if (I.is_zero()) return Ideal(R, {});
  // Syzygies of (f, i_1, ..., i_k): the coefficient of f runs over I : f.
  const auto order = MonomialOrder::position_over_term(R->nvars(), {0, f.graded_degree()});
  std::vector<Polynomial> elems{f + Polynomial::constant(R, 1).in_component(1)};
  for (const auto& g : I.groebner().elements()) elems.push_back(g);
  auto gb = GroebnerBasis::compute(R, elems, order);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < gb.size(); ++k)
    if (mono::component(gb.leading_monomials()[k]) == 1) out.push_back(gb.elements()[k].component(1));
  return Ideal(R, out);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) fail(ErrorKind::RingMismatch, "quotient across rings");
  std::optional<Ideal> acc;
  for (const auto& g : J.groebner().elements()) {
    Ideal q = quotient_by(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

Ideal saturate(const Ideal& I, const Ideal& J, int* iterations, int cap) {
  Ideal cur = I;
  for (int it = 1; it <= cap; ++it) {
    Ideal next = ideal_quotient(cur, J);
    if (next == cur) {
      if (iterations) *iterations = it;
      return Ideal(cur.ring(), cur.groebner().elements());
    }
    cur = std::move(next);
  }
  fail(ErrorKind::ResourceLimit, "saturation did not stabilize within the iteration cap");
}

Ideal saturate(const Ideal& I) { return saturate(I, Ideal::irrelevant(I.ring())); }

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) fail(ErrorKind::RingMismatch, "intersection across rings");
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R, {});
  // In R^3 with position-over-term: elements (1,1,1), (i,0,0), (0,j,0); those
  // vanishing in the first two components carry I cap J in the third.
  const auto order = MonomialOrder::position_over_term(R->nvars(), {0, 0, 0});
  const auto one = Polynomial::constant(R, 1);
  std::vector<Polynomial> elems{one + one.in_component(1) + one.in_component(2)};
  for (const auto& g : I.groebner().elements()) elems.push_back(g);
  for (const auto& g : J.groebner().elements()) elems.push_back(g.in_component(1));
  auto gb = GroebnerBasis::compute(R, elems, order);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < gb.size(); ++k)
    if (mono::component(gb.leading_monomials()[k]) == 2) out.push_back(gb.elements()[k].component(2));
  return Ideal(R, out);
}

Polynomial random_form(int degree, const RingPtr& ring, SeededRng& rng) {
  if (degree < 0) fail(ErrorKind::InvalidArgument, "negative degree");
  if (degree == 0) return Polynomial::constant(ring, rng.coeff(ring->field, true));
  auto mons = mono::all_of_degree(ring->nvars(), degree);
  std::sort(mons.begin(), mons.end(), [n = ring->nvars()](Mon a, Mon b) {
    return canonical_key(a, n) > canonical_key(b, n);
  });
  std::vector<Term> ts;
  for (Mon m : mons) {
    const Coeff c = rng.coeff(ring->field);
    if (c) ts.push_back({m, c});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

DimensionDegree dimension_degree(const Ideal& I) {
  const auto hs = I.hilbert_series();
  DimensionDegree out;
  const int k = hs.krull_dimension();
  out.proj_dim = k <= 0 ? -1 : k - 1;
  if (out.proj_dim < 0) return out;
  out.degree = hs.multiplicity();
  if (out.proj_dim == 1) out.genus = 1 - hs.polynomial_value(0);
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
  const PrimeField& F = f.field();
  const Term lg = g.leading();
  const Coeff inv = F.inv(lg.coeff);
  Polynomial r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term lt = r.leading();
    if (!mono::divides(lg.mon, lt.mon))
      fail(ErrorKind::InternalInconsistency, "exact division has a remainder");
    const Mon m = mono::quotient(lt.mon, lg.mon);
    const Coeff c = F.mul(lt.coeff, inv);
    q.push_back({m, c});
    r = r - g.times_monomial(c, m);
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.monic();
  if (g.is_zero()) return f.monic();
  const RingPtr& R = f.ring();
  // lcm generates (f) cap (g); gcd = f g / lcm.
  Ideal l = intersect(Ideal(R, {f}), Ideal(R, {g}));
  const auto& gens = l.groebner().elements();
  if (gens.size() != 1) fail(ErrorKind::InternalInconsistency, "intersection of principal ideals not principal");
  return exact_divide(f * g, gens.front()).monic();
}

}  // namespace curvelab
