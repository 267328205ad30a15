#pragma once

// Small dense exact linear algebra over Q.

#include "tropalg/rational.hpp"

#include <optional>
#include <vector>

namespace tropalg::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Unique solution of the square system A x = b, nullopt when A is singular.
std::optional<Vector> solve(Matrix a, Vector b);

/// Basis of { x : A x = 0 } for an r x cols matrix.
std::vector<Vector> nullspace(Matrix a, std::size_t cols);

Rational dot(const Vector& a, const Vector& b);

}  // namespace tropalg::linalg
