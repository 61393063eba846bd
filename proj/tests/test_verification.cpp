#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "trigalg/dct_algebra.hpp"
#include "trigalg/errors.hpp"
#include "trigalg/transforms.hpp"
#include "trigalg/verification.hpp"

using namespace trigalg;

TEST(DiagonalizationResidual, Examples) {
  std::mt19937_64 rng(1);
  const ComplexMatrix f = dft_matrix(9);
  EXPECT_LE(diagonalization_residual(f, ComplexMatrix::identity(9)), 1e-12);
  EXPECT_LE(diagonalization_residual(to_complex(dct_matrix(7)), to_complex(dct_basis(7, 3))), 1e-10);
  ComplexMatrix off(6, 6);
  off(1, 2) = 1.0;
  EXPECT_GT(diagonalization_residual(to_complex(dct_matrix(10)), off), 0.05);
  EXPECT_THROW(diagonalization_residual(f, ComplexMatrix::identity(8)), DimensionMismatch);
  EXPECT_THROW(diagonalization_residual(ComplexMatrix(3, 4), ComplexMatrix(3, 3)), DimensionMismatch);
}

TEST(ExhaustiveStructureConstants, Examples) {
  EXPECT_EQ(exhaustive_structure_constants(sign_subgroup(7))(3, 3, 0), 2);
  const int n = 10;
  const auto c = exhaustive_structure_constants(trivial_subgroup(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) EXPECT_EQ(c(i, j, k), (i + j) % n == k ? 1 : 0);
  const auto g = make_unit_subgroup(12, {5, 7});
  ASSERT_EQ(g.elements(), (std::vector<int>{1, 5, 7, 11}));
  EXPECT_EQ(exhaustive_structure_constants(g), structure_constants(orbit_partition(g)));
}

TEST(ExhaustiveStructureConstants, AgreesForEverySubgroup) {
  for (int n = 1; n <= 48; ++n)
    for (const auto& g : enumerate_unit_subgroups(n)) {
      const auto p = orbit_partition(g);
      EXPECT_EQ(exhaustive_structure_constants(g), structure_constants(p)) << n;
      EXPECT_EQ(representative_violations(p), 0u) << n;
    }
}

TEST(RepresentativeViolations, ZeroForOrbitPartition) {
  const auto p = orbit_partition(make_unit_subgroup(15, {2}));
  EXPECT_EQ(representative_violations(p), 0u);
}

TEST(Suite, SmallRangePasses) {
  const SuiteReport r = run_suite(2, 12);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
  EXPECT_TRUE(r.failures().empty());
  EXPECT_EQ(r.seed, kDefaultSuiteSeed);
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.passed, c.max_residual <= c.tolerance) << c.name;
    EXPECT_EQ(c.tolerance, check_tolerance(c.name));
  }
}

TEST(Suite, GoldenLines) {
  const SuiteReport seven = run_suite(7, 7);
  const std::string text = seven.to_text();
  EXPECT_NE(text.find("PASS  dct-basis-golden n=7"), std::string::npos) << text;
  const SuiteReport eleven = run_suite(11, 11);
  std::vector<std::string> names;
  for (const auto& c : eleven.checks) names.push_back(c.name);
  for (const char* want : {"dst-s-basis-golden", "dst-t-basis-golden", "dst-t-general-golden", "dct-basis-golden"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  EXPECT_TRUE(eleven.all_passed());
}

TEST(Suite, DeterministicForSeed) {
  const auto a = run_suite(9, 10, 123);
  const auto b = run_suite(9, 10, 123);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].max_residual, b.checks[i].max_residual);
  EXPECT_EQ(a.seed, 123u);
}

TEST(Suite, RangeValidation) {
  EXPECT_THROW(run_suite(5, 4), std::invalid_argument);
  EXPECT_THROW(run_suite(0, 4), std::invalid_argument);
  EXPECT_THROW(check_tolerance("no-such-check"), std::out_of_range);
}
