#pragma once

#include "sphereflow/rational.hpp"

#include <optional>
#include <vector>

namespace sphereflow {

using RationalRow = std::vector<Rational>;

/// Solves M x = b exactly by Gauss-Jordan elimination. Free unknowns are set to zero,
/// so the earliest columns are preferred as pivots. nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<RationalRow> matrix, std::vector<Rational> rhs);

int rank_exact(std::vector<RationalRow> matrix);

} // namespace sphereflow
