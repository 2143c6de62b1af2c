#pragma once

#include <optional>
#include <vector>

#include "zmlp/arith.hpp"

namespace zmlp {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols);

// Unique solution of m x = rhs, or absent when inconsistent or underdetermined.
std::optional<RationalVector> solve_unique(RationalMatrix m, const RationalVector& rhs, std::size_t cols);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace zmlp
