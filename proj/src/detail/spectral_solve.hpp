#pragma once

#include <span>
#include <string>
#include <vector>

#include "trigalg/matrix.hpp"

namespace trigalg::detail {

// x = synthesis * ((analysis * rhs) ./ lambda) for an operator that the pair
// (synthesis, analysis) diagonalizes with spectrum lambda.
inline ComplexVector spectral_solve(const ComplexMatrix& synthesis, const ComplexMatrix& analysis,
                                    std::span<const Complex> rhs, std::span<const Complex> lambda,
                                    double singular_tol) {
  if (rhs.size() != analysis.cols()) {
    throw DimensionMismatch("right-hand side has length " + std::to_string(rhs.size()) +
                            ", expected " + std::to_string(analysis.cols()));
  }
  std::vector<std::size_t> singular;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (std::abs(lambda[k]) <= singular_tol) singular.push_back(k);
  if (!singular.empty()) throw SingularElement(std::move(singular));

  ComplexVector y = analysis * rhs;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] /= lambda[k];
  return synthesis * std::span<const Complex>(y);
}

}  // namespace trigalg::detail
