#pragma once

#include <memory>
#include <vector>

#include "curvelab/monomial.hpp"
#include "curvelab/polynomial.hpp"

namespace curvelab {

struct GroebnerOptions {
  /// Stop after all S-pairs and generators of this degree; -1 means no cap.
  int max_degree = -1;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of a homogeneous submodule of a free module
/// (an ideal when every element lives in component 0). Elements are monic and
/// sorted by leading term, largest first, so equal submodules produce equal
/// bases.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  static GroebnerBasis compute(const RingPtr& ring, const std::vector<Polynomial>& gens,
                               const MonomialOrder& order, GroebnerOptions opts = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return *order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Leading monomials in the basis order, aligned with elements().
  const std::vector<Mon>& leading_monomials() const noexcept { return leads_; }
  bool truncated() const noexcept { return truncated_; }
  int truncation_degree() const noexcept { return truncation_degree_; }
  const GroebnerStats& stats() const noexcept { return stats_; }

  /// Fully reduced normal form; zero iff f lies in the submodule (for a
  /// truncated basis, only reliable up to the truncation degree).
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  /// Builds a reducer from an arbitrary generating set without completing it.
  static GroebnerBasis from_elements(const RingPtr& ring, const std::vector<Polynomial>& elems,
                                     const MonomialOrder& order);

  /// Internal data shared with the reduction engine.
  struct Data;

 private:
  RingPtr ring_;
  std::shared_ptr<const MonomialOrder> order_;
  std::vector<Polynomial> elements_;
  std::vector<Mon> leads_;
  std::shared_ptr<const Data> data_;
  bool truncated_ = false;
  int truncation_degree_ = -1;
  GroebnerStats stats_;
};

/// Leading term of f under the given order.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

/// Division-algorithm remainder of f by the list g (no completion).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order);

/// Reduced Groebner basis elements; throws NotHomogeneous on inhomogeneous input.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order);

}  // namespace curvelab
