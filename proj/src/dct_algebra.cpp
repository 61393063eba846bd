#include "trigalg/dct_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail/spectral_solve.hpp"
#include "trigalg/group_core.hpp"
#include "trigalg/transforms.hpp"

namespace trigalg {

namespace {

// |X_m| under Gamma = {+-1}.
int class_size(int n, long long m) { return (2 * m) % n == 0 ? 1 : 2; }

Complex times_sqrt2(const Complex& v) { return v * std::numbers::sqrt2; }
ExactQuadratic times_sqrt2(const ExactQuadratic& v) { return v * ExactQuadratic::sqrt2(); }

// v * sqrt(a * b) for a, b in {1, 2}.
template <typename T>
T scale_by_root(const T& v, int a, int b) {
  switch (a * b) {
    case 1:
      return v;
    case 2:
      return times_sqrt2(v);
    default:
      return v + v;
  }
}

void check_index(int n, std::size_t i) {
  const std::size_t size = dct_size(n);
  if (i >= size) {
    throw IndexOutOfRange("cosine basis index " + std::to_string(i) + " outside [0, " +
                          std::to_string(size - 1) + "] for n=" + std::to_string(n));
  }
}

// 1-based (j, k) as in the closed form; t holds t_0..t_N.
template <typename T>
Matrix<T> piecewise_general(int n, std::span<const T> t) {
  const int size = static_cast<int>(dct_size(n));
  if (t.size() != static_cast<std::size_t>(size)) {
    throw LengthMismatch("cosine element needs " + std::to_string(size) + " parameters, got " +
                         std::to_string(t.size()));
  }
  const bool even = n % 2 == 0;
  const int last = n / 2 + 1;  // the extra border row/column when n is even
  Matrix<T> out(size, size);
  for (int j = 1; j <= size; ++j) {
    for (int k = 1; k <= size; ++k) {
      T v;
      if (j == 1 || k == 1) {
        v = scale_by_root(t[std::max(j - 1, k - 1)], class_size(n, j - 1), class_size(n, k - 1));
      } else if (even && (j == last || k == last)) {
        const int a = last - j;
        const int b = last - k;
        v = scale_by_root(t[std::max(a, b)], class_size(n, a), class_size(n, b));
      } else {
        const int d = std::abs(k - j);
        const int s = k + j - 2;
        v = t[std::min(n - d, d)] + t[std::min(n - s, s)];
      }
      out(j - 1, k - 1) = v;
    }
  }
  return out;
}

}  // namespace

DctElement::DctElement(int n, ComplexVector params) : n_(n), params_(std::move(params)) {
  if (params_.size() != dct_size(n)) {
    throw LengthMismatch("cosine element needs " + std::to_string(dct_size(n)) +
                         " parameters, got " + std::to_string(params_.size()));
  }
}

DctElement DctElement::basis(int n, std::size_t i) {
  check_index(n, i);
  ComplexVector t(dct_size(n));
  t[i] = 1.0;
  return {n, std::move(t)};
}

Complex DctElement::folded(long long i) const {
  long long r = i % n_;
  if (r < 0) r += n_;
  return params_[static_cast<std::size_t>(std::min<long long>(r, n_ - r))];
}

ExactMatrix dct_basis(int n, std::size_t i) {
  check_index(n, i);
  const OrbitPartition p = orbit_partition(sign_subgroup(n));
  const StructureConstants c = structure_constants(p);
  const std::size_t size = p.size();
  ExactMatrix t(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      const std::int64_t count = c(i, j, k);
      if (count == 0) continue;
      const std::size_t xj = p.class_size(j);
      const std::size_t xk = p.class_size(k);
      if (xj == xk) {
        t(j, k) = count;
      } else if (xk == 2) {
        t(j, k) = ExactQuadratic(0, count);
      } else {
        // count / sqrt 2 = (count / 2) sqrt 2
        t(j, k) = ExactQuadratic(0, count).divided_by(2);
      }
    }
  }
  return t;
}

ComplexMatrix dct_general(const DctElement& e) {
  return piecewise_general<Complex>(e.modulus(), e.params());
}

ExactMatrix dct_general_exact(int n, std::span<const ExactQuadratic> params) {
  return piecewise_general<ExactQuadratic>(n, params);
}

ComplexVector dct_eigenvalues(const DctElement& e) {
  const int n = e.modulus();
  const std::size_t size = dct_size(n);
  ComplexVector lambda(size);
  for (std::size_t k = 0; k < size; ++k) {
    Complex acc{};
    for (std::size_t i = 0; i < size; ++i) {
      const long long m = static_cast<long long>(i * k) % n;
      acc += e.params()[i] * static_cast<double>(class_size(n, static_cast<long long>(i))) *
             std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / n);
    }
    lambda[k] = acc;
  }
  return lambda;
}

double default_membership_tolerance(const ComplexMatrix& m) {
  return 1e-9 * std::max(1.0, max_abs(m));
}

DctElement dct_membership(const ComplexMatrix& m, int n, std::optional<double> tol) {
  const std::size_t size = dct_size(n);
  if (m.rows() != size || m.cols() != size) {
    throw DimensionMismatch("cosine algebra for n=" + std::to_string(n) + " needs a " +
                            std::to_string(size) + "x" + std::to_string(size) + " matrix");
  }
  const double eps = tol.value_or(default_membership_tolerance(m));
  const ComplexMatrix u = to_complex(dct_matrix(n));
  const double residual = max_off_diagonal(u * m * u);
  if (residual > eps) throw NotInAlgebra(residual);

  ComplexVector t(size);
  for (std::size_t k = 0; k < size; ++k)
    t[k] = m(0, k) / std::sqrt(static_cast<double>(class_size(n, static_cast<long long>(k))));
  DctElement e(n, std::move(t));
  const double mismatch = max_abs_diff(dct_general(e), m);
  if (mismatch > eps) throw NotInAlgebra(mismatch);
  return e;
}

DctElement dct_multiply(const DctElement& a, const DctElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
  const int n = a.modulus();
  const StructureConstants c = structure_constants(orbit_partition(sign_subgroup(n)));
  ComplexVector out(dct_size(n));
  for (const auto& [key, count] : c.counts())
    out[key[2]] += a.params()[key[0]] * b.params()[key[1]] * static_cast<double>(count);
  return {n, std::move(out)};
}

ComplexVector dct_solve(const DctElement& e, std::span<const Complex> rhs, double singular_tol) {
  const ComplexVector lambda = dct_eigenvalues(e);
  const ComplexMatrix u = to_complex(dct_matrix(e.modulus()));
  return detail::spectral_solve(u, u, rhs, lambda, singular_tol);
}

bool dct_is_generator(int n, std::size_t i) {
  check_index(n, i);
  return gcd(static_cast<long long>(i), n) == 1;
}

}  // namespace trigalg
