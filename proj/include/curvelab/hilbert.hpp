#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "curvelab/monomial.hpp"

namespace curvelab {

/// Hilbert series N(t) / (1 - t)^n of a graded module F / M, where F is free
/// with twisted basis and M is a monomial submodule.
class HilbertSeries {
 public:
  HilbertSeries(int nvars, std::map<int, std::int64_t> numerator)
      : nvars_(nvars), numerator_(std::move(numerator)) {}

  /// Series of R^k / M for leading monomials `leads` (components index the
  /// basis, basis element c sits in degree component_degrees[c]).
  static HilbertSeries of_monomial_module(const std::vector<Mon>& leads, int nvars,
                                          const std::vector<int>& component_degrees);
  static HilbertSeries of_monomial_ideal(const std::vector<Mon>& leads, int nvars) {
    return of_monomial_module(leads, nvars, {0});
  }

  int nvars() const noexcept { return nvars_; }
  const std::map<int, std::int64_t>& numerator() const noexcept { return numerator_; }

  /// Dimension of the graded piece in degree j.
  std::int64_t value(int j) const;

  /// Krull dimension (power of 1 - t left after cancelling), -1 for the zero module.
  int krull_dimension() const;
  /// Multiplicity: reduced numerator evaluated at 1.
  std::int64_t multiplicity() const;
  /// P(j) evaluated exactly.
  std::int64_t polynomial_value(int j) const;
  /// Smallest j0 such that value(j) == polynomial_value(j) for all j >= j0.
  int regularity_index() const;

 private:
  std::map<int, std::int64_t> reduced(int& power) const;

  int nvars_;
  std::map<int, std::int64_t> numerator_;
};

/// Binomial coefficient C(n, k) extended polynomially to negative n; 0 for k < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace curvelab
