#include "curvelab/linalg.hpp"

namespace curvelab {

std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  const std::uint64_t p = f.characteristic();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(piv, k), m.at(r, k));
    const Coeff inv = f.inv(m.at(r, c));
    Coeff* pr = m.row(r);
    for (std::size_t k = c; k < m.cols(); ++k) pr[k] = f.mul(pr[k], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Coeff* ri = m.row(i);
      const Coeff factor = ri[c];
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t k = c; k < m.cols(); ++k)
        if (pr[k]) ri[k] = static_cast<Coeff>((ri[k] + neg * pr[k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& f) { return row_reduce(m, f).size(); }

std::vector<std::vector<Coeff>> kernel(Matrix m, const PrimeField& f) {
  const auto pivots = row_reduce(m, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace curvelab
