#include "sphereflow/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sphereflow {

PolyMatrix::PolyMatrix(int rows, int cols, VarSpace space)
  : rows_(rows)
  , cols_(cols)
  , entries_(static_cast<std::size_t>(rows * cols), Polynomial(space))
{
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("PolyMatrix dimensions must be positive");
  }
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows)
  : rows_(static_cast<int>(rows.size()))
  , cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0)
{
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("PolyMatrix dimensions must be positive");
  }
  for (auto const &row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("PolyMatrix rows have different lengths");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

void PolyMatrix::swap_rows(int a, int b)
{
  for (int c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

Polynomial determinant(PolyMatrix m)
{
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  int const n = m.rows();
  if (n == 1) {
    return m(0, 0);
  }
  if (n == 2) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  }
  VarSpace const space = m(0, 0).space();
  bool negate = false;
  Polynomial previous = Polynomial::constant(1, space);
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m(r, k).is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) {
        return Polynomial(space);
      }
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial numerator = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto quotient = exact_divide(numerator, previous);
        if (!quotient) {
          throw std::logic_error("Bareiss step failed to divide exactly");
        }
        m(i, j) = std::move(*quotient);
      }
      m(i, k) = Polynomial(space);
    }
    previous = m(k, k);
  }
  Polynomial det = m(n - 1, n - 1);
  return negate ? -det : det;
}

} // namespace sphereflow
