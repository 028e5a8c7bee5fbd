#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvelab/field.hpp"
#include "curvelab/monomial.hpp"

namespace curvelab {

/// Polynomial ring over a prime field: variable names plus coefficient field.
struct Ring {
  std::vector<std::string> names;
  PrimeField field;

  int nvars() const noexcept { return static_cast<int>(names.size()); }
  bool operator==(const Ring& o) const noexcept { return names == o.names && field == o.field; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, Coeff characteristic = PrimeField::kDefaultCharacteristic);
/// k[x, y, z, t]
RingPtr space_ring(Coeff characteristic = PrimeField::kDefaultCharacteristic);
/// k[y, z, t], the coordinate ring of the plane x = 0.
RingPtr plane_ring(Coeff characteristic = PrimeField::kDefaultCharacteristic);

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Mon mon;
  Coeff coeff;
};

/// Element of a free module R^n over a polynomial ring; components are
/// stored in the monomials, so ring elements are simply vectors supported in
/// component 0. Terms are kept sorted strictly descending in degrevlex (ties
/// on equal monomials broken by component) with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, int var);
  static Polynomial monomial(RingPtr ring, Coeff c, Mon m);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  /// Largest total monomial degree (ignoring component twists); -1 for zero.
  int degree() const;
  /// Degree with component twists; -1 for zero, throws if not homogeneous.
  int graded_degree(const std::vector<int>& shifts = {}) const;
  bool is_homogeneous(const std::vector<int>& shifts = {}) const;
  bool is_constant() const;
  /// Highest component index used, or -1 for zero.
  int max_component() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  /// At most one factor may carry non-zero components.
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(Coeff c, Mon m) const;
  Polynomial monic() const;
  Polynomial pow(int e) const;

  /// Entry in component k as a ring element.
  Polynomial component(int k) const;
  /// Moves a ring element into component k of a free module.
  Polynomial in_component(int k) const;
  /// Re-indexes components: comp c goes to c + offset.
  Polynomial shift_components(int offset) const;

  /// Simultaneous substitution of ring variables by ring elements.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;

  Coeff coefficient_of(Mon m) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_string(Mon m, const Ring& ring);

/// Canonical comparison key used for the sorted term storage.
std::uint64_t canonical_key(Mon m, int nvars);

/// Parses a homogeneous-or-not polynomial in the ring's variables, e.g.
/// "3*x^2*y - z t + 7". Integer coefficients, optional '*', '^' for powers.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace curvelab
