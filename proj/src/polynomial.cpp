#include "curvelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "curvelab/error.hpp"

namespace curvelab {

RingPtr make_ring(std::vector<std::string> names, Coeff characteristic) {
  if (names.empty() || names.size() > static_cast<std::size_t>(mono::kMaxVars))
    fail(ErrorKind::InvalidArgument, "ring must have between 1 and 5 variables");
  return std::make_shared<const Ring>(Ring{std::move(names), PrimeField(characteristic)});
}

RingPtr space_ring(Coeff characteristic) { return make_ring({"x", "y", "z", "t"}, characteristic); }
RingPtr plane_ring(Coeff characteristic) { return make_ring({"y", "z", "t"}, characteristic); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::uint64_t canonical_key(Mon m, int nvars) {
  std::uint64_t k = static_cast<std::uint64_t>(mono::degree(m)) << 48;
  int pos = 5;
  for (int v = nvars - 1; v >= 0; --v, --pos)
    k |= static_cast<std::uint64_t>(255 - mono::exponent(m, v)) << (8 * pos);
  k |= static_cast<std::uint64_t>(255 - mono::component(m));
  return k;
}

namespace {

struct KeyedTerm {
  std::uint64_t key;
  Term term;
};

std::vector<Term> normalize(std::vector<Term> terms, int nvars, const PrimeField& f) {
  std::vector<KeyedTerm> keyed;
  keyed.reserve(terms.size());
  for (const auto& t : terms)
    if (t.coeff != 0) keyed.push_back({canonical_key(t.mon, nvars), t});
  std::sort(keyed.begin(), keyed.end(),
            [](const KeyedTerm& a, const KeyedTerm& b) { return a.key > b.key; });
  std::vector<Term> out;
  out.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size();) {
    Coeff c = 0;
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].key == keyed[i].key) c = f.add(c, keyed[j++].term.coeff);
    if (c != 0) out.push_back({keyed[i].term.mon, c});
    i = j;
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial p(std::move(ring));
  c = c % p.field().characteristic();
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  Polynomial p(std::move(ring));
  if (var < 0 || var >= p.ring_->nvars()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  p.terms_.push_back({mono::variable(var), 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Coeff c, Mon m) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = normalize(std::move(terms), p.ring_->nvars(), p.ring_->field);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono::degree(t.mon));
  return d;
}

static int shift_of(const std::vector<int>& shifts, int comp) {
  return comp < static_cast<int>(shifts.size()) ? shifts[comp] : 0;
}

bool Polynomial::is_homogeneous(const std::vector<int>& shifts) const {
  if (terms_.empty()) return true;
  const int d0 = mono::degree(terms_[0].mon) + shift_of(shifts, mono::component(terms_[0].mon));
  for (const auto& t : terms_)
    if (mono::degree(t.mon) + shift_of(shifts, mono::component(t.mon)) != d0) return false;
  return true;
}

int Polynomial::graded_degree(const std::vector<int>& shifts) const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous(shifts)) fail(ErrorKind::NotHomogeneous, "element is not homogeneous: " + to_string());
  return mono::degree(terms_[0].mon) + shift_of(shifts, mono::component(terms_[0].mon));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono::exponents_only(terms_[0].mon) == 0);
}

int Polynomial::max_component() const {
  int c = -1;
  for (const auto& t : terms_) c = std::max(c, mono::component(t.mon));
  return c;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) fail(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  check_ring(o);
  const int n = ring_->nvars();
  const auto& f = ring_->field;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto ki = canonical_key(terms_[i].mon, n);
    const auto kj = canonical_key(o.terms_[j].mon, n);
    if (ki > kj) {
      out.terms_.push_back(terms_[i++]);
    } else if (kj > ki) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      const Coeff c = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (c != 0) out.terms_.push_back({terms_[i].mon, c});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field().neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) {
    if (!is_zero() || !o.is_zero()) check_ring(o);
    return Polynomial(ring_ ? ring_ : o.ring_);
  }
  check_ring(o);
  if (max_component() > 0 && o.max_component() > 0)
    fail(ErrorKind::InvalidArgument, "cannot multiply two free-module elements");
  const auto& f = ring_->field;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({mono::mul(a.mon, b.mon), f.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial out(ring_);
  c %= field().characteristic();
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = field().mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::times_monomial(Coeff c, Mon m) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({mono::mul(t.mon, m), field().mul(t.coeff, c)});
  // multiplication by a monomial preserves degrevlex order
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading().coeff));
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::component(int k) const {
  Polynomial out(ring_);
  for (const auto& t : terms_)
    if (mono::component(t.mon) == k) out.terms_.push_back({mono::with_component(t.mon, 0), t.coeff});
  return out;
}

Polynomial Polynomial::in_component(int k) const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({mono::with_component(t.mon, k), t.coeff});
  return from_terms(ring_, std::move(out.terms_));
}

Polynomial Polynomial::shift_components(int offset) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({mono::with_component(t.mon, mono::component(t.mon) + offset), t.coeff});
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const RingPtr& target) const {
  const int n = ring_->nvars();
  if (static_cast<int>(images.size()) != n) fail(ErrorKind::InvalidArgument, "substitution needs one image per variable");
  // powers[v][e] cached lazily
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial m = Polynomial::constant(target, t.coeff);
    for (int v = 0; v < n; ++v) {
      const int e = mono::exponent(t.mon, v);
      if (e) m = m * power(v, e);
    }
    const int comp = mono::component(t.mon);
    if (comp) m = m.in_component(comp);
    acc.insert(acc.end(), m.terms_.begin(), m.terms_.end());
  }
  return from_terms(target, std::move(acc));
}

Coeff Polynomial::coefficient_of(Mon m) const {
  for (const auto& t : terms_)
    if (t.mon == m) return t.coeff;
  return 0;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && !same_ring(ring_, o.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string monomial_string(Mon m, const Ring& ring) {
  std::string s;
  for (int v = 0; v < ring.nvars(); ++v) {
    const int e = mono::exponent(m, v);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += ring.names[v];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool module = max_component() > 0;
  for (const auto& t : terms_) {
    const std::int64_t c = field().to_signed(t.coeff);
    const std::string m = monomial_string(t.mon, *ring_);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (m.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << m;
    }
    if (module) os << "*e" << mono::component(t.mon);
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& s) : ring_(ring), s_(s) {}

  Polynomial parse() {
    Polynomial acc(ring_);
    skip();
    if (pos_ >= s_.size()) error("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      acc = acc + (sign < 0 ? -term : term);
      first = false;
    }
    return acc;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  long long parse_int() {
    long long v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 50)) error("integer too large");
      ++pos_;
    }
    if (pos_ == start) error("expected integer");
    return v;
  }
  Polynomial parse_term() {
    const auto& f = ring_->field;
    Coeff c = 1;
    std::vector<int> exps(ring_->nvars(), 0);
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      const char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = f.mul(c, f.from_int(parse_int()));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        int var = -1;
        for (int v = 0; v < ring_->nvars(); ++v)
          if (ring_->names[v] == name) var = v;
        if (var < 0) {
          pos_ = start;
          error("unknown variable '" + name + "'");
        }
        skip();
        int e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = static_cast<int>(parse_int());
        }
        exps[var] += e;
        if (exps[var] > mono::kMaxExponent) error("exponent too large");
        any = true;
      } else if (ch == '*') {
        if (!any) error("unexpected '*'");
        ++pos_;
        continue;
      } else if (ch == '+' || ch == '-') {
        break;
      } else {
        error(std::string("unexpected character '") + ch + "'");
      }
    }
    if (!any) error("expected a term");
    return Polynomial::monomial(ring_, c, mono::from_exponents(exps));
  }

  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(ring, text).parse();
}

}  // namespace curvelab
