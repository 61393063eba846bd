#include "trigalg/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigalg/group_core.hpp"

namespace trigalg {

namespace {

// cos/sin of 2*pi*m/n with m reduced mod n first.
double cos_frac(long long m, int n) {
  long long r = m % n;
  if (r < 0) r += n;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / n);
}

double sin_frac(long long m, int n) {
  long long r = m % n;
  if (r < 0) r += n;
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(r) / n);
}

}  // namespace

std::size_t dct_size(int n) {
  if (n < 1) throw InvalidModulus(n);
  return static_cast<std::size_t>(n / 2 + 1);
}

std::size_t dst_size(int n) {
  if (n < 1) throw InvalidModulus(n);
  return static_cast<std::size_t>((4 * n - 1) / 8);
}

ComplexMatrix dft_matrix(int n) {
  const CyclicGroup g(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) f(j, k) = g.root_power(static_cast<long long>(j) * k) * scale;
  return f;
}

RealMatrix dct_matrix(int n) {
  const std::size_t size = dct_size(n);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  auto class_size = [n](std::size_t j) { return (2 * j) % n == 0 ? 1.0 : 2.0; };
  RealMatrix u(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      u(j, k) = std::sqrt(class_size(j) * class_size(k)) *
                cos_frac(static_cast<long long>(j * k), n) / sqrt_n;
    }
  }
  return u;
}

RealMatrix dst_matrix(int n) {
  const std::size_t size = dst_size(n);
  const double scale = 2.0 / std::sqrt(static_cast<double>(n));
  RealMatrix w(size, size);
  for (std::size_t j = 1; j <= size; ++j)
    for (std::size_t k = 1; k <= size; ++k)
      w(j - 1, k - 1) = scale * sin_frac(static_cast<long long>(j * k), n);
  return w;
}

ComplexMatrix dst_matrix_complex(int n) {
  return map_matrix<Complex>(dst_matrix(n), [](double x) { return Complex(0.0, -x); });
}

RealMatrix parity_permutation(int n) {
  const CyclicGroup g(n);
  RealMatrix p(n, n);
  for (int j = 0; j < n; ++j) p(j, g.reduce(-j)) = 1.0;
  return p;
}

Signal::Signal(int n_, ComplexVector s) : n(n_), samples(std::move(s)) {
  if (n < 1) throw InvalidModulus(n);
  if (samples.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("signal needs " + std::to_string(n) + " samples, got " +
                         std::to_string(samples.size()));
  }
}

Signal Signal::delta(int n, long long j) {
  const CyclicGroup g(n);
  ComplexVector s(n);
  s[g.reduce(j)] = 1.0;
  return {n, std::move(s)};
}

Signal Signal::exponential(int n, long long j) {
  const CyclicGroup g(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector s(n);
  for (int x = 0; x < n; ++x) s[x] = g.root_power(-j * x) * scale;
  return {n, std::move(s)};
}

Signal Signal::tau(int n, long long j) {
  const CyclicGroup g(n);
  ComplexVector s(n);
  for (int x = 0; x < n; ++x) s[x] = g.root_power(j * x) - g.root_power(-j * x);
  return {n, std::move(s)};
}

Complex Signal::operator()(long long x) const {
  long long r = x % n;
  if (r < 0) r += n;
  return samples[static_cast<std::size_t>(r)];
}

double Signal::norm() const {
  double acc = 0.0;
  for (const auto& v : samples) acc += std::norm(v);
  return std::sqrt(acc);
}

bool Signal::is_even(double tol) const {
  for (int x = 0; x < n; ++x)
    if (std::abs((*this)(x) - (*this)(-x)) > tol) return false;
  return true;
}

bool Signal::is_odd(double tol) const {
  for (int x = 0; x < n; ++x)
    if (std::abs((*this)(x) + (*this)(-x)) > tol) return false;
  return true;
}

Signal apply_dft(const Signal& f) {
  const CyclicGroup g(f.n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.n));
  ComplexVector out(f.n);
  for (int xi = 0; xi < f.n; ++xi) {
    Complex acc{};
    for (int j = 0; j < f.n; ++j) acc += f.samples[j] * g.root_power(static_cast<long long>(j) * xi);
    out[xi] = acc * scale;
  }
  return {f.n, std::move(out)};
}

Signal embed_even(std::span<const Complex> t, int n) {
  if (t.size() != dct_size(n)) {
    throw LengthMismatch("even embedding needs " + std::to_string(dct_size(n)) +
                         " coordinates, got " + std::to_string(t.size()));
  }
  ComplexVector s(n);
  for (int x = 0; x < n; ++x) {
    const int c = std::min(x, n - x);
    const double size = (2 * c) % n == 0 ? 1.0 : 2.0;
    s[x] = t[c] / std::sqrt(size);
  }
  return {n, std::move(s)};
}

Signal embed_odd(std::span<const Complex> s, int n) {
  if (s.size() != dst_size(n)) {
    throw LengthMismatch("odd embedding needs " + std::to_string(dst_size(n)) +
                         " coordinates, got " + std::to_string(s.size()));
  }
  ComplexVector f(n);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t j = 1; j <= s.size(); ++j) {
    f[j] = s[j - 1] * inv_sqrt2;
    f[n - j] = -s[j - 1] * inv_sqrt2;
  }
  return {n, std::move(f)};
}

}  // namespace trigalg
