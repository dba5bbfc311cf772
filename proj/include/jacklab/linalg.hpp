#pragma once

#include "jacklab/rational.hpp"

#include <optional>
#include <vector>

namespace jacklab {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m, int cols);

// Basis of {x : m x = 0}; one vector per free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, int cols);

// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace jacklab
