#pragma once

#include <optional>
#include <vector>

#include "relgb/scalar.hpp"

namespace relgb {

// Dense matrix over an exact field, stored by rows.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols);

std::size_t matrix_rank(Matrix m, std::size_t cols);

// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::size_t cols);

// Some x with m x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::size_t cols, const std::vector<Scalar>& b);

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner, std::size_t cols);

} // namespace relgb
