#pragma once

#include <vector>

#include "curvelab/field.hpp"

namespace curvelab {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff* row(std::size_t r) { return data_.data() + r * cols_; }
  const Coeff* row(std::size_t r) const { return data_.data() + r * cols_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coeff> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& f);
std::size_t rank(Matrix m, const PrimeField& f);
/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<Coeff>> kernel(Matrix m, const PrimeField& f);

}  // namespace curvelab
