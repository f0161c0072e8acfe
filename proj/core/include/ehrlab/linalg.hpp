#pragma once

#include <optional>
#include <vector>

#include "ehrlab/rational.hpp"

namespace ehrlab {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

int rank(Mat a);

Rational determinant(Mat a);

/// Solves the square system A x = b; nullopt if A is singular.
std::optional<Vec> solve_square(Mat a, Vec b);

/// Solves a (possibly rectangular) consistent system A x = b, free
/// variables set to zero; nullopt if the system is inconsistent.
std::optional<Vec> solve_consistent(Mat a, Vec b);

/// Basis of the right nullspace of the m x n matrix A.
std::vector<Vec> nullspace(Mat a, std::size_t cols);

}  // namespace ehrlab
