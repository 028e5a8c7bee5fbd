#include "curvelab/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

struct OTerm {
  std::uint64_t key;
  Mon mon;
  Coeff coeff;
};

using OPoly = std::vector<OTerm>;  // sorted by key, descending

OPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({order.key(t.mon), t.mon, t.coeff});
  std::sort(out.begin(), out.end(), [](const OTerm& a, const OTerm& b) { return a.key > b.key; });
  return out;
}

Polynomial from_ordered(const RingPtr& ring, const OPoly& p) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p) ts.push_back({t.mon, t.coeff});
  return Polynomial::from_terms(ring, std::move(ts));
}

void make_monic(OPoly& p, const PrimeField& f) {
  if (p.empty() || p.front().coeff == 1) return;
  const Coeff inv = f.inv(p.front().coeff);
  for (auto& t : p) t.coeff = f.mul(t.coeff, inv);
}

/// Open-addressing map from monomials to coefficients, cleared in O(touched).
class Accumulator {
 public:
  Accumulator() { resize(1 << 10); }

  void clear() {
    for (auto s : touched_) used_[s] = 0;
    touched_.clear();
  }

  /// Adds c at m; returns true if m was not present before.
  bool add(Mon m, Coeff c, const PrimeField& f) {
    if (2 * (touched_.size() + 1) > keys_.size()) grow();
    std::size_t s = slot(m);
    if (used_[s]) {
      vals_[s] = f.add(vals_[s], c);
      return false;
    }
    used_[s] = 1;
    keys_[s] = m;
    vals_[s] = c;
    touched_.push_back(s);
    return true;
  }

  Coeff take(Mon m) {
    std::size_t s = slot(m);
    if (!used_[s]) return 0;
    Coeff c = vals_[s];
    vals_[s] = 0;
    return c;
  }

 private:
  static std::size_t hash(Mon m) {
    m ^= m >> 29;
    m *= 0xbf58476d1ce4e5b9ULL;
    m ^= m >> 32;
    return static_cast<std::size_t>(m);
  }
  std::size_t slot(Mon m) const {
    const std::size_t mask = keys_.size() - 1;
    std::size_t s = hash(m) & mask;
    while (used_[s] && keys_[s] != m) s = (s + 1) & mask;
    return s;
  }
  void resize(std::size_t n) {
    keys_.assign(n, 0);
    vals_.assign(n, 0);
    used_.assign(n, 0);
  }
  void grow() {
    std::vector<std::pair<Mon, Coeff>> live;
    live.reserve(touched_.size());
    for (auto s : touched_) live.emplace_back(keys_[s], vals_[s]);
    resize(keys_.size() * 2);
    touched_.clear();
    for (auto& [m, c] : live) {
      std::size_t s = slot(m);
      used_[s] = 1;
      keys_[s] = m;
      vals_[s] = c;
      touched_.push_back(s);
    }
  }

  std::vector<Mon> keys_;
  std::vector<Coeff> vals_;
  std::vector<unsigned char> used_;
  std::vector<std::size_t> touched_;
};

struct Elem {
  OPoly poly;
  Mon lead;
  int degree;
  bool redundant = false;
};

class Engine {
 public:
  Engine(const PrimeField& f, const MonomialOrder& order) : f_(f), order_(order) {}

  std::vector<Elem> elems;
  std::vector<std::vector<int>> by_comp;

  void add_reducer(OPoly p) {
    Elem e;
    e.lead = p.front().mon;
    e.degree = order_.graded_degree(e.lead);
    e.poly = std::move(p);
    const int c = mono::component(e.lead);
    if (static_cast<int>(by_comp.size()) <= c) by_comp.resize(c + 1);
    by_comp[c].push_back(static_cast<int>(elems.size()));
    elems.push_back(std::move(e));
  }

  int find_divisor(Mon m) const {
    const int c = mono::component(m);
    if (c >= static_cast<int>(by_comp.size())) return -1;
    for (int idx : by_comp[c])
      if (mono::divides(elems[idx].lead, m)) return idx;
    return -1;
  }

  /// Loads scale * mult * p (optionally skipping the leading term) into the accumulator.
  void load(const OPoly& p, Coeff scale, Mon mult, bool skip_lead) {
    for (std::size_t i = skip_lead ? 1 : 0; i < p.size(); ++i) {
      const Mon m = mono::mul(p[i].mon, mult);
      if (acc_.add(m, f_.mul(p[i].coeff, scale), f_)) push(m);
    }
  }

  void begin() {
    acc_.clear();
    heap_.clear();
  }

  /// Drains the accumulator into a fully reduced polynomial.
  OPoly reduce_loaded(bool full = true) {
    OPoly result;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end());
      const auto [key, m] = heap_.back();
      heap_.pop_back();
      const Coeff c = acc_.take(m);
      if (c == 0) continue;
      if (!full && !result.empty()) {
        result.push_back({key, m, c});
        continue;
      }
      const int d = find_divisor(m);
      if (d < 0) {
        result.push_back({key, m, c});
        continue;
      }
      const Elem& g = elems[d];
      const Mon q = mono::quotient(m, g.lead);
      // g is monic: subtract c * q * g, lead cancels exactly
      load(g.poly, f_.neg(c), q, true);
    }
    return result;
  }

 private:
  void push(Mon m) {
    heap_.emplace_back(order_.key(m), m);
    std::push_heap(heap_.begin(), heap_.end());
  }

  const PrimeField& f_;
  const MonomialOrder& order_;
  Accumulator acc_;
  std::vector<std::pair<std::uint64_t, Mon>> heap_;
};

struct Pair {
  int i, j;
  Mon lcm;
  int degree;
  std::uint64_t key;
};

}  // namespace

struct GroebnerBasis::Data {
  explicit Data(const PrimeField& f, const MonomialOrder& o) : order(o), engine(f, order) {}
  MonomialOrder order;
  mutable Engine engine;
  mutable std::mutex mutex;
};

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  std::uint64_t bk = order.key(best->mon);
  for (const auto& t : f.terms()) {
    const auto k = order.key(t.mon);
    if (k > bk) {
      bk = k;
      best = &t;
    }
  }
  return *best;
}

GroebnerBasis GroebnerBasis::from_elements(const RingPtr& ring, const std::vector<Polynomial>& elems,
                                           const MonomialOrder& order) {
  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.order_ = std::make_shared<const MonomialOrder>(order);
  auto data = std::make_shared<Data>(ring->field, order);
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    if (!same_ring(e.ring(), ring)) fail(ErrorKind::RingMismatch, "generator in a different ring");
    OPoly p = to_ordered(e, order);
    make_monic(p, ring->field);
    gb.leads_.push_back(p.front().mon);
    gb.elements_.push_back(from_ordered(ring, p));
    data->engine.add_reducer(std::move(p));
  }
  gb.data_ = std::move(data);
  return gb;
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  if (f.is_zero()) return f;
  if (!same_ring(f.ring(), ring_)) fail(ErrorKind::RingMismatch, "reducing a polynomial from another ring");
  if (!data_) return f;
  std::lock_guard<std::mutex> lock(data_->mutex);
  Engine& e = data_->engine;
  e.begin();
  e.load(to_ordered(f, data_->order), 1, 0, false);
  return from_ordered(ring_, e.reduce_loaded(true));
}

GroebnerBasis GroebnerBasis::compute(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                     const MonomialOrder& order, GroebnerOptions opts) {
  const PrimeField& f = ring->field;
  bool is_ideal = true;
  std::vector<std::pair<int, OPoly>> inputs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::RingMismatch, "generator in a different ring");
    if (!g.is_homogeneous(order.shifts()))
      fail(ErrorKind::NotHomogeneous, "Groebner basis input must be homogeneous: " + g.to_string());
    if (g.max_component() > 0) is_ideal = false;
    OPoly p = to_ordered(g, order);
    inputs.emplace_back(order.graded_degree(p.front().mon), std::move(p));
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  auto data = std::make_shared<Data>(f, order);
  Engine& eng = data->engine;
  std::vector<Pair> pairs;
  GroebnerStats stats;

  auto update = [&](int k) {
    const Mon lk = eng.elems[k].lead;
    const int ck = mono::component(lk);
    // Gebauer-Moeller criterion B on existing pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (const auto& p : pairs) {
      if (mono::divides(lk, p.lcm) && mono::lcm(eng.elems[p.i].lead, lk) != p.lcm &&
          mono::lcm(eng.elems[p.j].lead, lk) != p.lcm)
        continue;
      kept.push_back(p);
    }
    pairs.swap(kept);
    // New pairs.
    std::vector<Pair> fresh;
    std::vector<char> coprime_flag;
    for (int i = 0; i < k; ++i) {
      const Elem& e = eng.elems[i];
      if (e.redundant || mono::component(e.lead) != ck) continue;
      const Mon l = mono::lcm(e.lead, lk);
      fresh.push_back({i, k, l, order.graded_degree(l), order.key(l)});
      coprime_flag.push_back(is_ideal && mono::coprime(e.lead, lk));
    }
    // Criterion M: drop pairs whose lcm is a proper multiple of another new lcm.
    std::vector<char> drop(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b)
        if (a != b && fresh[b].lcm != fresh[a].lcm && mono::divides(fresh[b].lcm, fresh[a].lcm)) {
          drop[a] = 1;
          break;
        }
    // Criterion F and product criterion per lcm class.
    std::map<Mon, std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) classes[fresh[a].lcm].push_back(a);
    for (auto& [l, members] : classes) {
      bool any_coprime = false;
      for (auto a : members) any_coprime |= coprime_flag[a] != 0;
      if (any_coprime) continue;
      pairs.push_back(fresh[members.front()]);
    }
    for (int i = 0; i < k; ++i)
      if (!eng.elems[i].redundant && mono::divides(lk, eng.elems[i].lead)) eng.elems[i].redundant = true;
  };

  auto insert = [&](OPoly p) {
    make_monic(p, f);
    eng.add_reducer(std::move(p));
    update(static_cast<int>(eng.elems.size()) - 1);
  };

  std::size_t next_input = 0;
  bool truncated = false;
  while (next_input < inputs.size() || !pairs.empty()) {
    int deg = 1 << 30;
    if (next_input < inputs.size()) deg = inputs[next_input].first;
    for (const auto& p : pairs) deg = std::min(deg, p.degree);
    if (opts.max_degree >= 0 && deg > opts.max_degree) {
      truncated = true;
      break;
    }
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (const auto& p : pairs) (p.degree == deg ? batch : rest).push_back(p);
    pairs.swap(rest);
    std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) { return a.key < b.key; });
    for (const auto& p : batch) {
      ++stats.pairs_considered;
      const Elem& a = eng.elems[p.i];
      const Elem& b = eng.elems[p.j];
      const Mon ua = mono::quotient(p.lcm, a.lead);
      const Mon ub = mono::quotient(p.lcm, b.lead);
      eng.begin();
      eng.load(a.poly, 1, ua, true);
      eng.load(b.poly, f.neg(1), ub, true);
      OPoly r = eng.reduce_loaded(true);
      ++stats.pairs_reduced;
      if (r.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      insert(std::move(r));
    }
    while (next_input < inputs.size() && inputs[next_input].first == deg) {
      eng.begin();
      eng.load(inputs[next_input].second, 1, 0, false);
      OPoly r = eng.reduce_loaded(true);
      ++next_input;
      if (!r.empty()) insert(std::move(r));
    }
  }

  // Minimalize and interreduce.
  std::vector<int> minimal;
  for (int i = 0; i < static_cast<int>(eng.elems.size()); ++i) {
    bool keep = true;
    for (int j = 0; j < static_cast<int>(eng.elems.size()) && keep; ++j)
      if (j != i && mono::divides(eng.elems[j].lead, eng.elems[i].lead) &&
          (eng.elems[j].lead != eng.elems[i].lead || j < i))
        keep = false;
    if (keep) minimal.push_back(i);
  }
  auto final_data = std::make_shared<Data>(f, order);
  Engine& fin = final_data->engine;
  for (int i : minimal) fin.add_reducer(eng.elems[i].poly);
  std::vector<OPoly> reduced;
  for (std::size_t idx = 0; idx < fin.elems.size(); ++idx) {
    const OPoly& p = fin.elems[idx].poly;
    fin.begin();
    fin.load(p, 1, 0, true);
    OPoly tail = fin.reduce_loaded(true);
    OPoly full;
    full.reserve(tail.size() + 1);
    full.push_back(p.front());
    full.insert(full.end(), tail.begin(), tail.end());
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const OPoly& a, const OPoly& b) { return a.front().key > b.front().key; });

  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.order_ = std::make_shared<const MonomialOrder>(order);
  auto out_data = std::make_shared<Data>(f, order);
  for (auto& p : reduced) {
    gb.leads_.push_back(p.front().mon);
    gb.elements_.push_back(from_ordered(ring, p));
    out_data->engine.add_reducer(std::move(p));
  }
  gb.data_ = std::move(out_data);
  gb.truncated_ = truncated;
  gb.truncation_degree_ = truncated ? opts.max_degree : -1;
  gb.stats_ = stats;
  return gb;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order) {
  if (g.empty()) fail(ErrorKind::InvalidArgument, "normal form needs a nonempty divisor list");
  for (const auto& h : g)
    if (!same_ring(h.ring(), f.ring())) fail(ErrorKind::RingMismatch, "normal form across rings");
  return GroebnerBasis::from_elements(f.ring(), g, order).reduce(f);
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) return {};
  return GroebnerBasis::compute(gens.front().ring(), gens, order).elements();
}

}  // namespace curvelab
