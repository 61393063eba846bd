#include "trigalg/circulant_algebra.hpp"

#include <string>

#include "detail/spectral_solve.hpp"
#include "trigalg/dct_algebra.hpp"
#include "trigalg/group_core.hpp"
#include "trigalg/transforms.hpp"

namespace trigalg {

CirculantElement::CirculantElement(int n, ComplexVector c) : n_(n), c_(std::move(c)) {
  if (n < 1) throw InvalidModulus(n);
  if (c_.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("circulant element needs " + std::to_string(n) + " parameters, got " +
                         std::to_string(c_.size()));
  }
}

CirculantElement CirculantElement::basis(int n, std::size_t i) {
  if (i >= static_cast<std::size_t>(n)) {
    throw IndexOutOfRange("shift index " + std::to_string(i) + " outside [0, " +
                          std::to_string(n - 1) + "]");
  }
  ComplexVector c(n);
  c[i] = 1.0;
  return {n, std::move(c)};
}

ExactMatrix circulant_shift_basis(int n, std::size_t i) {
  const CyclicGroup g(n);
  if (i >= static_cast<std::size_t>(n)) {
    throw IndexOutOfRange("shift index " + std::to_string(i) + " outside [0, " +
                          std::to_string(n - 1) + "]");
  }
  ExactMatrix t(n, n);
  for (int j = 0; j < n; ++j) t(j, g.reduce(j + static_cast<long long>(i))) = 1;
  return t;
}

ComplexMatrix circulant_general(const CirculantElement& e) {
  const CyclicGroup g(e.modulus());
  const int n = e.modulus();
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = e.params()[g.reduce(k - j)];
  return m;
}

ComplexVector circulant_eigenvalues(const CirculantElement& e) {
  const CyclicGroup g(e.modulus());
  const int n = e.modulus();
  ComplexVector lambda(n);
  for (int k = 0; k < n; ++k) {
    Complex acc{};
    for (int i = 0; i < n; ++i) acc += e.params()[i] * g.root_power(static_cast<long long>(i) * k);
    lambda[k] = acc;
  }
  return lambda;
}

CirculantElement circulant_multiply(const CirculantElement& a, const CirculantElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
  const CyclicGroup g(a.modulus());
  const int n = a.modulus();
  ComplexVector c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[g.reduce(i + j)] += a.params()[i] * b.params()[j];
  return {n, std::move(c)};
}

CirculantElement circulant_membership(const ComplexMatrix& m, int n, std::optional<double> tol) {
  if (n < 1) throw InvalidModulus(n);
  if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("circulant algebra for n=" + std::to_string(n) + " needs an " +
                            std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  const double eps = tol.value_or(default_membership_tolerance(m));
  const ComplexMatrix f = dft_matrix(n);
  const double residual = max_off_diagonal(adjoint(f) * m * f);
  if (residual > eps) throw NotInAlgebra(residual);

  CirculantElement e(n, ComplexVector(m.row(0).begin(), m.row(0).end()));
  const double mismatch = max_abs_diff(circulant_general(e), m);
  if (mismatch > eps) throw NotInAlgebra(mismatch);
  return e;
}

ComplexVector circulant_solve(const CirculantElement& e, std::span<const Complex> rhs,
                              double singular_tol) {
  const ComplexVector lambda = circulant_eigenvalues(e);
  const ComplexMatrix f = dft_matrix(e.modulus());
  return detail::spectral_solve(f, adjoint(f), rhs, lambda, singular_tol);
}

}  // namespace trigalg
