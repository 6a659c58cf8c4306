#pragma once

#include <optional>

#include "posy/rational.hpp"

// Exact dense linear algebra over the rationals for the small systems used here.
namespace posy::linalg {

/// Rank of the matrix whose rows are given.
std::size_t rank(const QMatrix& rows);

/// True if the given vectors are linearly independent.
bool independent(const std::vector<QVector>& vectors);

/// Solves the square system A x = b; nullopt if A is singular.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

QMatrix transpose(const QMatrix& a);

}  // namespace posy::linalg
