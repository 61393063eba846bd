#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "trigalg/errors.hpp"
#include "trigalg/exact_quadratic.hpp"

namespace trigalg {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major matrix with explicit dimensions.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;
using ExactMatrix = Matrix<ExactQuadratic>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  return a * std::span<const T>(x);
}

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] += b.data()[i];
  return a;
}

template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] -= b.data()[i];
  return a;
}

template <typename T, typename S>
Matrix<T> scaled(Matrix<T> a, const S& s) {
  for (auto& v : a.data()) v = v * s;
  return a;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

/// Elementwise conversion between scalar types (e.g. exact -> complex).
template <typename To, typename From, typename Fn>
Matrix<To> map_matrix(const Matrix<From>& a, Fn&& fn) {
  Matrix<To> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = fn(a.data()[i]);
  return out;
}

inline RealMatrix to_real(const ExactMatrix& a) {
  return map_matrix<double>(a, [](const ExactQuadratic& x) { return x.to_double(); });
}
inline ComplexMatrix to_complex(const ExactMatrix& a) {
  return map_matrix<Complex>(a, [](const ExactQuadratic& x) { return Complex(x.to_double()); });
}
inline ComplexMatrix to_complex(const RealMatrix& a) {
  return map_matrix<Complex>(a, [](double x) { return Complex(x); });
}

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& x) { return std::abs(x); }
inline double magnitude(const ExactQuadratic& x) { return std::abs(x.to_double()); }

/// max_{i,j} |a_ij|
template <typename T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, magnitude(v));
  return m;
}

/// max_{i,j} |a_ij - b_ij|
template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, magnitude(a.data()[i] - b.data()[i]));
  return m;
}

template <typename T>
double max_off_diagonal(const Matrix<T>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, magnitude(a(i, j)));
  return m;
}

template <typename T>
std::vector<T> diagonal(const Matrix<T>& a) {
  std::vector<T> d(std::min(a.rows(), a.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a(i, i);
  return d;
}

template <typename T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const Complex> a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace trigalg
