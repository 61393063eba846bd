#include "trigalg/linalg.hpp"

#include <Eigen/Dense>

namespace trigalg {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

}  // namespace

std::size_t numeric_rank(const ComplexMatrix& a, double relative_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(a));
  lu.setThreshold(relative_tol);
  return static_cast<std::size_t>(lu.rank());
}

std::optional<ComplexVector> solve_linear(const ComplexMatrix& a, std::span<const Complex> b) {
  if (!a.is_square() || a.rows() != b.size()) throw DimensionMismatch("solve_linear");
  if (a.rows() == 0) return ComplexVector{};
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(a));
  if (!lu.isInvertible()) return std::nullopt;
  Eigen::VectorXcd rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i) = b[i];
  const Eigen::VectorXcd x = lu.solve(rhs);
  return ComplexVector(x.data(), x.data() + x.size());
}

}  // namespace trigalg
