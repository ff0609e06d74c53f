#pragma once

#include <optional>
#include <vector>

#include "stab/poly.hpp"

namespace stab {

/// Row-major dense matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

/// In-place reduced row echelon form. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of the right nullspace, one vector per free column. The vector for
/// free column j has entry 1 at j and zeros at all other free columns.
std::vector<std::vector<Rat>> nullspace(Matrix m);

/// Some solution of m*v = rhs, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const Matrix& m, const std::vector<Rat>& rhs);

Rat determinant(Matrix m);

}  // namespace stab
