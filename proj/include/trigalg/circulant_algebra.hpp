#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// sum_i c_i T_i with T_i the cyclic shift having ones where k - j = i (mod n).
/// The matrix entry (j, k) is c_{(k - j) mod n}; row 0 is c and column 0 is
/// (c_0, c_{n-1}, ..., c_1).
class CirculantElement {
 public:
  CirculantElement(int n, ComplexVector c);
  static CirculantElement basis(int n, std::size_t i);

  int modulus() const { return n_; }
  const ComplexVector& params() const { return c_; }

 private:
  int n_;
  ComplexVector c_;
};

/// 0/1 matrix with ones exactly where k - j = i (mod n). Throws IndexOutOfRange.
ExactMatrix circulant_shift_basis(int n, std::size_t i);

ComplexMatrix circulant_general(const CirculantElement& e);

/// lambda_k = sum_i c_i zeta^{ik}, the diagonal of F^* M F.
ComplexVector circulant_eigenvalues(const CirculantElement& e);

/// Cyclic convolution of the parameter vectors.
CirculantElement circulant_multiply(const CirculantElement& a, const CirculantElement& b);

/// c = row 0 of m if F^* m F is diagonal within tol (default 1e-9 * max(1, |m|_max)).
CirculantElement circulant_membership(const ComplexMatrix& m, int n,
                                      std::optional<double> tol = {});

/// x = F ((F^* rhs) ./ lambda).
ComplexVector circulant_solve(const CirculantElement& e, std::span<const Complex> rhs,
                              double singular_tol = 1e-12);

}  // namespace trigalg
