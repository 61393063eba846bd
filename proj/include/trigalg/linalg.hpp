#pragma once

#include <optional>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// Numerical rank with a relative pivot threshold.
std::size_t numeric_rank(const ComplexMatrix& a, double relative_tol = 1e-10);

/// Solves a x = b for square, invertible a; std::nullopt when a is singular.
std::optional<ComplexVector> solve_linear(const ComplexMatrix& a, std::span<const Complex> b);

}  // namespace trigalg
