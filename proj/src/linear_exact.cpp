#include "sphereflow/linear_exact.hpp"

#include <stdexcept>
#include <utility>

namespace sphereflow {

namespace {

/// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> reduce(std::vector<RationalRow> &m)
{
  std::vector<int> pivots;
  if (m.empty()) {
    return pivots;
  }
  std::size_t const cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) {
      ++sel;
    }
    if (sel == m.size()) {
      continue;
    }
    std::swap(m[row], m[sel]);
    Rational const inv = 1 / m[row][col];
    for (auto &v : m[row]) {
      v *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) {
        continue;
      }
      Rational const factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] -= factor * m[row][c];
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve_exact(std::vector<RationalRow> matrix, std::vector<Rational> rhs)
{
  if (matrix.size() != rhs.size()) {
    throw std::invalid_argument("solve_exact: row count mismatch");
  }
  if (matrix.empty()) {
    return std::vector<Rational>{};
  }
  std::size_t const unknowns = matrix.front().size();
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    if (matrix[r].size() != unknowns) {
      throw std::invalid_argument("solve_exact: ragged matrix");
    }
    matrix[r].push_back(rhs[r]);
  }
  auto const pivots = reduce(matrix);
  std::vector<Rational> solution(unknowns, Rational(0));
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    if (r < pivots.size()) {
      if (static_cast<std::size_t>(pivots[r]) == unknowns) {
        return std::nullopt;
      }
      solution[pivots[r]] = matrix[r][unknowns];
    } else if (matrix[r][unknowns] != 0) {
      return std::nullopt;
    }
  }
  return solution;
}

int rank_exact(std::vector<RationalRow> matrix) { return static_cast<int>(reduce(matrix).size()); }

} // namespace sphereflow
