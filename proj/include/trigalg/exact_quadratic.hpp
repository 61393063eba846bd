#pragma once

#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace trigalg {

/// Exact element a + b*sqrt(2) of the ring Z[sqrt(2)].
///
/// Entries of the cosine/sine basis matrices all live in this ring, so golden
/// comparisons can be made with operator== instead of a tolerance. Arithmetic
/// is checked: any int64 overflow throws std::overflow_error.
class ExactQuadratic {
 public:
  constexpr ExactQuadratic() = default;
  constexpr ExactQuadratic(std::int64_t a) : a_(a) {}  // NOLINT: implicit from integers
  constexpr ExactQuadratic(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

  static constexpr ExactQuadratic sqrt2() { return {0, 1}; }

  constexpr std::int64_t rational_part() const { return a_; }
  constexpr std::int64_t sqrt2_part() const { return b_; }

  double to_double() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * std::numbers::sqrt2;
  }

  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend constexpr bool operator==(const ExactQuadratic&, const ExactQuadratic&) = default;

  ExactQuadratic operator-() const { return {neg(a_), neg(b_)}; }

  ExactQuadratic& operator+=(const ExactQuadratic& o) {
    a_ = add(a_, o.a_);
    b_ = add(b_, o.b_);
    return *this;
  }
  ExactQuadratic& operator-=(const ExactQuadratic& o) { return *this += -o; }
  ExactQuadratic& operator*=(const ExactQuadratic& o) {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
    const std::int64_t a = add(mul(a_, o.a_), mul(2, mul(b_, o.b_)));
    const std::int64_t b = add(mul(a_, o.b_), mul(b_, o.a_));
    a_ = a;
    b_ = b;
    return *this;
  }

  friend ExactQuadratic operator+(ExactQuadratic x, const ExactQuadratic& y) { return x += y; }
  friend ExactQuadratic operator-(ExactQuadratic x, const ExactQuadratic& y) { return x -= y; }
  friend ExactQuadratic operator*(ExactQuadratic x, const ExactQuadratic& y) { return x *= y; }

  /// Exact division by an integer; throws std::domain_error unless both parts divide.
  ExactQuadratic divided_by(std::int64_t d) const {
    if (d == 0 || a_ % d != 0 || b_ % d != 0) {
      throw std::domain_error("ExactQuadratic: inexact division by " + std::to_string(d));
    }
    return {a_ / d, b_ / d};
  }

  /// Human-readable form, e.g. "0", "2", "√2", "-1+3√2".
  std::string to_string() const {
    if (b_ == 0) return std::to_string(a_);
    std::string radical;
    if (b_ == 1) {
      radical = "√2";
    } else if (b_ == -1) {
      radical = "-√2";
    } else {
      radical = std::to_string(b_) + "√2";
    }
    if (a_ == 0) return radical;
    return std::to_string(a_) + (b_ > 0 ? "+" : "") + radical;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactQuadratic& x) {
    return os << x.to_string();
  }

 private:
  static std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("ExactQuadratic: overflow");
    return r;
  }
  static std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("ExactQuadratic: overflow");
    return r;
  }
  static std::int64_t neg(std::int64_t x) { return mul(x, -1); }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

}  // namespace trigalg
