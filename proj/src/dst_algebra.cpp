#include "trigalg/dst_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "detail/spectral_solve.hpp"
#include "trigalg/dct_algebra.hpp"
#include "trigalg/group_core.hpp"
#include "trigalg/linalg.hpp"
#include "trigalg/transforms.hpp"

namespace trigalg {

namespace {

long long reduce(long long m, int n) {
  long long r = m % n;
  return r < 0 ? r + n : r;
}

// min(m mod n, n - m mod n): the representative of {m, -m} in [0, n/2].
long long fold(long long m, int n) {
  const long long r = reduce(m, n);
  return std::min(r, n - r);
}

void check_length(const ComplexVector& v, int n, const char* what) {
  if (v.size() != dst_size(n)) {
    throw LengthMismatch(std::string(what) + " needs " + std::to_string(dst_size(n)) +
                         " parameters, got " + std::to_string(v.size()));
  }
}

void check_index(int n, std::size_t i) {
  const std::size_t size = dst_size(n);
  if (i < 1 || i > size) {
    throw IndexOutOfRange("sine basis index " + std::to_string(i) + " outside [1, " +
                          std::to_string(size) + "] for n=" + std::to_string(n));
  }
}

template <typename T>
Matrix<T> s_general(int n, std::span<const T> s) {
  const int size = static_cast<int>(dst_size(n));
  if (s.size() != static_cast<std::size_t>(size)) {
    throw LengthMismatch("S-form needs " + std::to_string(size) + " parameters, got " +
                         std::to_string(s.size()));
  }
  Matrix<T> out(size, size);
  for (int j = 1; j <= size; ++j) {
    for (int k = 1; k <= size; ++k) {
      const int d = std::abs(k - j);
      T acc{};
      for (int l = 1; l <= std::min(j, k); ++l) {
        const int m = d + 2 * l - 1;
        // sgn(n/2 - m), computed on integers
        const int sign = (n > 2 * m) - (n < 2 * m);
        if (sign == 0) continue;
        const T& term = s[std::min(n - m, m) - 1];
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      out(j - 1, k - 1) = acc;
    }
  }
  return out;
}

template <typename T>
Matrix<T> t_general(int n, std::span<const T> t) {
  if (n % 2 == 0) throw EvenModulus(n);
  const int size = static_cast<int>(dst_size(n));
  if (t.size() != static_cast<std::size_t>(size)) {
    throw LengthMismatch("T-form needs " + std::to_string(size) + " parameters, got " +
                         std::to_string(t.size()));
  }
  auto param = [&](long long m) -> T {
    const long long f = fold(m, n);
    return f == 0 ? T{} : t[f - 1];
  };
  Matrix<T> out(size, size);
  for (int j = 1; j <= size; ++j)
    for (int k = 1; k <= size; ++k) out(j - 1, k - 1) = param(j + k) - param(j - k);
  return out;
}

}  // namespace

DstElementS::DstElementS(int n, ComplexVector s) : n_(n), s_(std::move(s)) {
  check_length(s_, n_, "S-form");
}

DstElementS DstElementS::basis(int n, std::size_t i) {
  check_index(n, i);
  ComplexVector s(dst_size(n));
  s[i - 1] = 1.0;
  return {n, std::move(s)};
}

Complex DstElementS::folded(long long m) const {
  const long long r = reduce(m, n_);
  if (r == 0 || 2 * r == n_) return {};
  return 2 * r < n_ ? s_[r - 1] : -s_[n_ - r - 1];
}

DstElementT::DstElementT(int n, ComplexVector t) : n_(n), t_(std::move(t)) {
  if (n % 2 == 0) throw EvenModulus(n);
  check_length(t_, n_, "T-form");
}

Complex DstElementT::folded(long long m) const {
  const long long f = fold(m, n_);
  return f == 0 ? Complex{} : t_[f - 1];
}

ComplexMatrix dst_s_general(const DstElementS& e) {
  return s_general<Complex>(e.modulus(), e.params());
}

ExactMatrix dst_s_general_exact(int n, std::span<const ExactQuadratic> s) {
  return s_general<ExactQuadratic>(n, s);
}

ExactMatrix dst_s_basis(int n, std::size_t i) {
  check_index(n, i);
  std::vector<ExactQuadratic> s(dst_size(n));
  s[i - 1] = 1;
  return s_general<ExactQuadratic>(n, s);
}

ExactMatrix dst_t_basis(int n, std::size_t i) {
  check_index(n, i);
  const std::size_t size = dst_size(n);
  auto indicator = [&](long long m) -> std::int64_t {
    const long long r = reduce(m, n);
    return (r == static_cast<long long>(i) || r == n - static_cast<long long>(i)) ? 1 : 0;
  };
  ExactMatrix out(size, size);
  for (std::size_t j = 1; j <= size; ++j) {
    for (std::size_t k = 1; k <= size; ++k) {
      const long long jj = static_cast<long long>(j);
      const long long kk = static_cast<long long>(k);
      out(j - 1, k - 1) = indicator(jj - kk) - indicator(jj + kk);
    }
  }
  return out;
}

ComplexMatrix dst_t_general(const DstElementT& e) {
  return t_general<Complex>(e.modulus(), e.params());
}

ExactMatrix dst_t_general_exact(int n, std::span<const ExactQuadratic> t) {
  return t_general<ExactQuadratic>(n, t);
}

DstElementS dst_to_s(const DstElementT& e) {
  const ComplexMatrix m = dst_t_general(e);
  const auto first = m.row(0);
  return {e.modulus(), ComplexVector(first.begin(), first.end())};
}

DstElementT dst_to_t(const DstElementS& e) {
  const int n = e.modulus();
  if (n % 2 == 0) throw EvenModulus(n);
  const std::size_t size = dst_size(n);
  // Row k of the system: [T]_{1,k} = t_{fold(1+k)} - t_{fold(1-k)}.
  ComplexMatrix a(size, size);
  for (std::size_t k = 1; k <= size; ++k) {
    const long long plus = fold(static_cast<long long>(k) + 1, n);
    const long long minus = fold(1 - static_cast<long long>(k), n);
    if (plus != 0) a(k - 1, plus - 1) += 1.0;
    if (minus != 0) a(k - 1, minus - 1) -= 1.0;
  }
  auto t = solve_linear(a, e.params());
  if (!t) throw SingularConversion("S-to-T conversion system is singular for n=" + std::to_string(n));
  return {n, std::move(*t)};
}

ComplexVector dst_eigenvalues(const DstElementS& e) {
  const int n = e.modulus();
  const std::size_t size = dst_size(n);
  auto sin_frac = [n](long long m) {
    return std::sin(2.0 * std::numbers::pi * static_cast<double>(reduce(m, n)) / n);
  };
  ComplexVector lambda(size);
  for (std::size_t k = 1; k <= size; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= size; ++j)
      acc += e.params()[j - 1] * sin_frac(static_cast<long long>(j * k));
    lambda[k - 1] = acc / sin_frac(static_cast<long long>(k));
  }
  return lambda;
}

ComplexVector dst_eigenvalues(const DstElementT& e) {
  const int n = e.modulus();
  const std::size_t size = dst_size(n);
  ComplexVector lambda(size);
  for (std::size_t k = 1; k <= size; ++k) {
    Complex acc{};
    for (std::size_t i = 1; i <= size; ++i) {
      const double c =
          std::cos(2.0 * std::numbers::pi * static_cast<double>(reduce(i * k, n)) / n);
      acc -= e.params()[i - 1] * (2.0 * c);
    }
    lambda[k - 1] = acc;
  }
  return lambda;
}

DstElementS dst_membership(const ComplexMatrix& m, int n, std::optional<double> tol) {
  const std::size_t size = dst_size(n);
  if (m.rows() != size || m.cols() != size) {
    throw DimensionMismatch("sine algebra for n=" + std::to_string(n) + " needs a " +
                            std::to_string(size) + "x" + std::to_string(size) + " matrix");
  }
  const double eps = tol.value_or(default_membership_tolerance(m));
  const ComplexMatrix w = to_complex(dst_matrix(n));
  const double residual = max_off_diagonal(w * m * w);
  if (residual > eps) throw NotInAlgebra(residual);

  ComplexVector s;
  if (size > 0) s.assign(m.row(0).begin(), m.row(0).end());
  DstElementS e(n, std::move(s));
  const double mismatch = max_abs_diff(dst_s_general(e), m);
  if (mismatch > eps) throw NotInAlgebra(mismatch);
  return e;
}

ComplexVector dst_solve(const DstElementS& e, std::span<const Complex> rhs, double singular_tol) {
  const ComplexVector lambda = dst_eigenvalues(e);
  const ComplexMatrix w = to_complex(dst_matrix(e.modulus()));
  return detail::spectral_solve(w, w, rhs, lambda, singular_tol);
}

bool dst_is_generator(int n, std::size_t i) {
  check_index(n, i);
  return gcd(static_cast<long long>(i), n) == 1;
}

namespace {

template <typename T, typename Residual>
std::vector<CrossSumViolation> cross_sum_impl(const Matrix<T>& m, Residual&& residual_of) {
  if (!m.is_square()) throw DimensionMismatch("cross-sum check needs a square matrix");
  const long long size = static_cast<long long>(m.rows());
  auto at = [&](long long i, long long j) -> T {
    if (i < 1 || j < 1 || i > size || j > size) return T{};
    return m(i - 1, j - 1);
  };
  std::vector<CrossSumViolation> out;
  for (long long i = 1; i <= size; ++i) {
    for (long long j = 1; j <= size; ++j) {
      const T diff = at(i - 1, j) + at(i + 1, j) - at(i, j - 1) - at(i, j + 1);
      if (auto r = residual_of(diff); r) {
        out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), *r});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CrossSumViolation> cross_sum_check(const ExactMatrix& m) {
  return cross_sum_impl(m, [](const ExactQuadratic& d) -> std::optional<double> {
    if (d.is_zero()) return std::nullopt;
    return std::abs(d.to_double());
  });
}

std::vector<CrossSumViolation> cross_sum_check(const ComplexMatrix& m, double tol) {
  return cross_sum_impl(m, [tol](const Complex& d) -> std::optional<double> {
    const double r = std::abs(d);
    if (r <= tol) return std::nullopt;
    return r;
  });
}

}  // namespace trigalg
