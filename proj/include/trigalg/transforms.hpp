#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// Dimension of the cosine transform: floor(n/2) + 1.
std::size_t dct_size(int n);
/// Dimension of the sine transform: floor((n - 1/4) / 2), i.e. the number of
/// classes {j, -j} with 2j != 0.
std::size_t dst_size(int n);

/// F_n(j, k) = zeta^{jk} / sqrt(n), 0-based, zeta = exp(-2*pi*i/n).
ComplexMatrix dft_matrix(int n);

/// U(j, k) = sqrt(|X_j| |X_k|) cos(2*pi*j*k/n) / sqrt(n), 0 <= j, k <= floor(n/2).
/// Real, symmetric and orthogonal.
RealMatrix dct_matrix(int n);

/// Real carrier W of the sine transform: W(j, k) = 2 sin(2*pi*j*k/n) / sqrt(n)
/// with 1-based j, k in [1, dst_size(n)]. The unitary sine transform itself is
/// V = -i W. Returns a 0x0 matrix for n <= 2.
RealMatrix dst_matrix(int n);

/// V = -i W.
ComplexMatrix dst_matrix_complex(int n);

/// The permutation f(x) -> f(-x) on L^2(Z/nZ); equals F_n^2.
RealMatrix parity_permutation(int n);

/// A function Z/nZ -> C, sample j holding f(j).
struct Signal {
  int n = 1;
  ComplexVector samples;

  Signal() = default;
  Signal(int n, ComplexVector samples);

  /// delta_j
  static Signal delta(int n, long long j);
  /// epsilon_j(x) = exp(2*pi*i*j*x/n) / sqrt(n)
  static Signal exponential(int n, long long j);
  /// tau_j(x) = -2i sin(2*pi*j*x/n) = zeta^{jx} - zeta^{-jx}. With
  /// zeta = exp(-2*pi*i/n) the difference zeta^{-jx} - zeta^{jx} has the
  /// opposite sign; the sine form is the one matching V = -i W.
  static Signal tau(int n, long long j);

  Complex operator()(long long x) const;
  double norm() const;
  bool is_even(double tol) const;
  bool is_odd(double tol) const;
};

/// Naive O(n^2) unitary DFT: fhat(xi) = n^{-1/2} sum_j f(j) exp(-2*pi*i*j*xi/n).
Signal apply_dft(const Signal& f);

/// Even embedding of cosine coordinates: f(x) = t_{c(x)} / sqrt|X_{c(x)}|
/// with c the class of x under {+-1}. t has length dct_size(n).
Signal embed_even(std::span<const Complex> t, int n);

/// Odd embedding of sine coordinates: f(j) = s_j / sqrt 2, f(n-j) = -s_j / sqrt 2
/// for 1 <= j <= dst_size(n), zero elsewhere. s is 1-based in meaning,
/// stored 0-based (s[0] is s_1).
Signal embed_odd(std::span<const Complex> s, int n);

}  // namespace trigalg
