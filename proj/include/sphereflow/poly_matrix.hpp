#pragma once

#include "sphereflow/polynomial.hpp"

#include <vector>

namespace sphereflow {

/// Dense row-major matrix of polynomials sharing one variable space.
class PolyMatrix
{
public:
  PolyMatrix(int rows, int cols, VarSpace space = VarSpace::Sphere);
  PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Polynomial &operator()(int r, int c) { return entries_[r * cols_ + c]; }
  Polynomial const &operator()(int r, int c) const { return entries_[r * cols_ + c]; }

  void swap_rows(int a, int b);

private:
  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Exact determinant: closed form up to 2x2, fraction-free Bareiss elimination beyond.
/// Throws std::invalid_argument for a non-square matrix.
Polynomial determinant(PolyMatrix m);

} // namespace sphereflow
