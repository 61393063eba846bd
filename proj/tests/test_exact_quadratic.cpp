#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "trigalg/exact_quadratic.hpp"

using trigalg::ExactQuadratic;

TEST(ExactQuadratic, Sqrt2SquaredIsTwo) {
  const auto r = ExactQuadratic::sqrt2();
  EXPECT_EQ(r * r, ExactQuadratic(2));
}

TEST(ExactQuadratic, ProductFormula) {
  // (1 + 2r)(3 - r) = 3 - r + 6r - 4 = -1 + 5r
  EXPECT_EQ(ExactQuadratic(1, 2) * ExactQuadratic(3, -1), ExactQuadratic(-1, 5));
}

TEST(ExactQuadratic, RepresentationIsUnique) {
  EXPECT_NE(ExactQuadratic(2, 0), ExactQuadratic(0, 1));
  EXPECT_NE(ExactQuadratic(1, 1), ExactQuadratic(1, -1));
  EXPECT_EQ(ExactQuadratic(3, -4), ExactQuadratic(3, -4));
}

TEST(ExactQuadratic, RingLawsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const ExactQuadratic a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, ExactQuadratic(0));
    const double expected = a.to_double() * b.to_double();
    EXPECT_NEAR((a * b).to_double(), expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(ExactQuadratic, FloatConversion) {
  EXPECT_DOUBLE_EQ(ExactQuadratic(0, 1).to_double(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(ExactQuadratic(-1, 3).to_double(), -1.0 + 3.0 * std::sqrt(2.0));
}

TEST(ExactQuadratic, DivisionMustBeExact) {
  EXPECT_EQ(ExactQuadratic(4, -6).divided_by(2), ExactQuadratic(2, -3));
  EXPECT_THROW(ExactQuadratic(1, 2).divided_by(2), std::domain_error);
  EXPECT_THROW(ExactQuadratic(2, 2).divided_by(0), std::domain_error);
}

TEST(ExactQuadratic, OverflowThrows) {
  const ExactQuadratic big(std::numeric_limits<std::int64_t>::max(), 0);
  EXPECT_THROW(big + ExactQuadratic(1), std::overflow_error);
  EXPECT_THROW(big * ExactQuadratic(2), std::overflow_error);
  EXPECT_THROW(ExactQuadratic(0, std::numeric_limits<std::int64_t>::max()) * ExactQuadratic(0, 1),
               std::overflow_error);
}

TEST(ExactQuadratic, Printing) {
  EXPECT_EQ(ExactQuadratic(0).to_string(), "0");
  EXPECT_EQ(ExactQuadratic(2).to_string(), "2");
  EXPECT_EQ(ExactQuadratic(0, 1).to_string(), "√2");
  EXPECT_EQ(ExactQuadratic(0, -1).to_string(), "-√2");
  EXPECT_EQ(ExactQuadratic(-1, 3).to_string(), "-1+3√2");
  EXPECT_EQ(ExactQuadratic(1, -2).to_string(), "1-2√2");
  std::ostringstream os;
  os << ExactQuadratic(0, 1);
  EXPECT_EQ(os.str(), "√2");
}
