#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// Element of the sine algebra in S-form: s = (s_1, ..., s_N) is the first row
/// of the matrix, N = dst_size(n). Stored 0-based, s[0] holding s_1.
class DstElementS {
 public:
  DstElementS(int n, ComplexVector s);
  static DstElementS basis(int n, std::size_t i);  // s = e_i, 1 <= i <= N

  int modulus() const { return n_; }
  const ComplexVector& params() const { return s_; }
  /// s_m under s_m = -s_{n-m}; zero at m = 0 and m = n/2.
  Complex folded(long long m) const;

 private:
  int n_;
  ComplexVector s_;
};

/// Element of the sine algebra in T-form (odd n only): t = (t_1, ..., t_N)
/// parametrizes [T]_{j,k} = t_{j+k} - t_{j-k} with t_m = t_{n-m}, t_0 = 0.
/// The induced matrix is sum_i (-t_i) T_i in terms of dst_t_basis.
class DstElementT {
 public:
  DstElementT(int n, ComplexVector t);

  int modulus() const { return n_; }
  const ComplexVector& params() const { return t_; }
  Complex folded(long long m) const;

 private:
  int n_;
  ComplexVector t_;
};

/// [S]_{j,k} = sum_{l=1}^{min(j,k)} sgn(n/2 - |k-j| - 2l + 1) s_{min(n-|k-j|-2l+1, |k-j|+2l-1)}.
ComplexMatrix dst_s_general(const DstElementS& e);
ExactMatrix dst_s_general_exact(int n, std::span<const ExactQuadratic> s);

/// S_i: dst_s_general with s = e_i. 1 <= i <= N, else IndexOutOfRange.
ExactMatrix dst_s_basis(int n, std::size_t i);

/// T_i(j, k) = x_{i, j-k} - x_{i, j+k}, x_{i,m} = [m in {i, -i}], 1-based j, k.
/// Satisfies W T_i W = 2 diag(cos(2*pi*i*k/n)).
ExactMatrix dst_t_basis(int n, std::size_t i);

/// [T]_{j,k} = t_{min(n-j-k, j+k)} - t_{min(n-|j-k|, |j-k|)}. Throws EvenModulus.
ComplexMatrix dst_t_general(const DstElementT& e);
ExactMatrix dst_t_general_exact(int n, std::span<const ExactQuadratic> t);

/// Conversions between the two parametrizations (odd n). T -> S reads the first
/// row; S -> T solves the N x N system equating first rows.
DstElementT dst_to_t(const DstElementS& e);
DstElementS dst_to_s(const DstElementT& e);

/// S-form: lambda_k = sum_j s_j sin(2*pi*j*k/n) / sin(2*pi*k/n), k = 1..N.
ComplexVector dst_eigenvalues(const DstElementS& e);
/// T-form: lambda_k = sum_i (-t_i) 2 cos(2*pi*i*k/n).
ComplexVector dst_eigenvalues(const DstElementT& e);

/// s = first row of m if W m W is diagonal within tol (default 1e-9 * max(1, |m|_max)).
DstElementS dst_membership(const ComplexMatrix& m, int n, std::optional<double> tol = {});

/// x = W ((W rhs) ./ lambda).
ComplexVector dst_solve(const DstElementS& e, std::span<const Complex> rhs,
                        double singular_tol = 1e-12);

/// True iff T_i generates the algebra, i.e. gcd(i, n) = 1.
bool dst_is_generator(int n, std::size_t i);

/// A cell (1-based) where a_{i-1,j} + a_{i+1,j} != a_{i,j-1} + a_{i,j+1}
/// under zero padding outside the matrix.
struct CrossSumViolation {
  std::size_t row;
  std::size_t col;
  double residual;
};

std::vector<CrossSumViolation> cross_sum_check(const ExactMatrix& m);
std::vector<CrossSumViolation> cross_sum_check(const ComplexMatrix& m, double tol = 1e-12);

}  // namespace trigalg
