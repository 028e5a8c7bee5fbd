#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "curvelab/groebner.hpp"
#include "curvelab/hilbert.hpp"
#include "curvelab/polynomial.hpp"

namespace curvelab {

/// Deterministic random stream; identical seeds give identical draws.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform element of the field (nonzero if requested).
  Coeff coeff(const PrimeField& f, bool nonzero = false);
  /// Independent stream derived from this seed and a label.
  SeededRng fork(std::uint64_t label) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Homogeneous ideal with a lazily computed, shared reduced Groebner basis
/// (degrevlex). Copies share the cache; filling it is thread-safe.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(const RingPtr& ring);
  /// (x_0, ..., x_{n-1})
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  /// Equality as ideals (compares reduced Groebner bases).
  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  /// f * I
  Ideal times(const Polynomial& f) const;

  HilbertSeries hilbert_series() const;
  std::int64_t hilbert_function(int j) const { return hilbert_series().value(j); }
  /// dim I_j = C(j + n - 1, n - 1) - h(j)
  std::int64_t dim_in_degree(int j) const;
  /// Basis of I_j (reduced echelon, one element per dimension).
  std::vector<Polynomial> graded_piece(int j) const;

  /// Ideal with minimal homogeneous generators.
  Ideal minimalized() const;
  /// Generators of degree <= j only.
  Ideal truncated_generators(int j) const;
  /// Maps generators into another ring by substituting variables.
  Ideal substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// I : (f)
Ideal quotient_by(const Ideal& I, const Polynomial& f);
/// I : J, the intersection of the quotients by each generator of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// I : J^infinity. Throws ResourceLimit after `cap` iterations.
Ideal saturate(const Ideal& I, const Ideal& J, int* iterations = nullptr, int cap = 50);
/// Saturation with respect to the irrelevant ideal.
Ideal saturate(const Ideal& I);
Ideal intersect(const Ideal& I, const Ideal& J);

/// Dense homogeneous form with uniformly random coefficients.
Polynomial random_form(int degree, const RingPtr& ring, SeededRng& rng);

struct DimensionDegree {
  int proj_dim = -1;
  std::int64_t degree = 0;
  std::optional<std::int64_t> genus;  ///< only for curves
};
DimensionDegree dimension_degree(const Ideal& I);

/// Exact quotient f / g; throws InternalInconsistency if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);
/// Monic greatest common divisor.
Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g);

}  // namespace curvelab
