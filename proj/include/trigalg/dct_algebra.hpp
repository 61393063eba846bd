#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// An element sum_i t_i T_i of the algebra diagonalized by the cosine
/// transform, stored as its parameters (t_0, ..., t_N), N = floor(n/2).
class DctElement {
 public:
  DctElement(int n, ComplexVector params);

  /// t = e_i
  static DctElement basis(int n, std::size_t i);

  int modulus() const { return n_; }
  const ComplexVector& params() const { return params_; }
  /// t_i with the folding t_i = t_{-i} = t_{n-i}.
  Complex folded(long long i) const;

 private:
  int n_;
  ComplexVector params_;
};

/// Basis matrix T_i, entries c_{ijk} sqrt|X_k| / sqrt|X_j| in Z[sqrt 2].
/// Built from brute-force structure constants of Gamma = {+-1}.
/// Throws IndexOutOfRange unless 0 <= i <= floor(n/2).
ExactMatrix dct_basis(int n, std::size_t i);

/// The general element, entry by entry from the Toeplitz-plus-Hankel
/// piecewise formula. Border rows and columns read t_{max(j-1,k-1)}.
ComplexMatrix dct_general(const DctElement& e);

/// Same formula over exact parameters.
ExactMatrix dct_general_exact(int n, std::span<const ExactQuadratic> params);

/// lambda_k = sum_i t_i |X_i| cos(2*pi*i*k/n), k = 0..N. The k-th column of the
/// cosine matrix is the matching eigenvector.
ComplexVector dct_eigenvalues(const DctElement& e);

/// Default membership tolerance: 1e-9 * max(1, max|M_ij|).
double default_membership_tolerance(const ComplexMatrix& m);

/// Recovers the parameters of m if U m U is diagonal to within tol.
/// Throws DimensionMismatch or NotInAlgebra (with the off-diagonal residual).
DctElement dct_membership(const ComplexMatrix& m, int n, std::optional<double> tol = {});

/// Product via structure constants: (ab)_k = sum_{i,j} a_i b_j c_{ijk}.
DctElement dct_multiply(const DctElement& a, const DctElement& b);

/// x = U ((U rhs) ./ lambda). Throws SingularElement if any |lambda_k| <= singular_tol.
ComplexVector dct_solve(const DctElement& e, std::span<const Complex> rhs,
                        double singular_tol = 1e-12);

/// True iff T_i generates the algebra, i.e. gcd(i, n) = 1.
bool dct_is_generator(int n, std::size_t i);

}  // namespace trigalg
