#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigalg {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnitGenerator : public Error {
 public:
  NonUnitGenerator(long long generator, int n)
      : Error("generator " + std::to_string(generator) + " is not a unit modulo " +
              std::to_string(n)),
        generator_(generator) {}
  long long generator() const { return generator_; }

 private:
  long long generator_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch(int a, int b)
      : Error("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class EvenModulus : public Error {
 public:
  explicit EvenModulus(int n)
      : Error("operation requires an odd modulus, got n=" + std::to_string(n)) {}
};

class InvalidModulus : public Error {
 public:
  explicit InvalidModulus(int n) : Error("modulus must be >= 1, got " + std::to_string(n)) {}
};

/// The matrix is not diagonalized by the transform; carries the largest
/// off-diagonal magnitude found after conjugation.
class NotInAlgebra : public Error {
 public:
  explicit NotInAlgebra(double residual)
      : Error("matrix is not in the algebra (off-diagonal residual " + std::to_string(residual) +
              ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Some eigenvalue is at or below the singularity threshold.
class SingularElement : public Error {
 public:
  explicit SingularElement(std::vector<std::size_t> indices)
      : Error(describe(indices)), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  static std::string describe(const std::vector<std::size_t>& idx) {
    std::string s = "singular element: eigenvalues at indices";
    for (std::size_t i : idx) s += " " + std::to_string(i);
    return s + " are below the threshold";
  }
  std::vector<std::size_t> indices_;
};

class SingularConversion : public Error {
 public:
  using Error::Error;
};

/// A serialized document that does not match the expected schema.
class MalformedDocument : public Error {
 public:
  using Error::Error;
};

}  // namespace trigalg
