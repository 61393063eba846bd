#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "trigalg/errors.hpp"
#include "trigalg/group_core.hpp"
#include "trigalg/transforms.hpp"

using namespace trigalg;

namespace {

std::vector<std::vector<int>> classes_of(const OrbitPartition& p) { return p.classes(); }

}  // namespace

TEST(UnitSubgroup, ClosureExamples) {
  EXPECT_EQ(make_unit_subgroup(10, {9}).elements(), (std::vector<int>{1, 9}));
  EXPECT_EQ(make_unit_subgroup(7, {}).elements(), (std::vector<int>{1}));
  EXPECT_EQ(make_unit_subgroup(8, {3, 5}).elements(), (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(make_unit_subgroup(7, {-1}).elements(), (std::vector<int>{1, 6}));
}

TEST(UnitSubgroup, RejectsNonUnits) {
  EXPECT_THROW(make_unit_subgroup(10, {2}), NonUnitGenerator);
  EXPECT_THROW(make_unit_subgroup(9, {3}), NonUnitGenerator);
  EXPECT_THROW(make_unit_subgroup(0, {}), InvalidModulus);
}

TEST(UnitSubgroup, EnumerationIsClosedAndDistinct) {
  for (int n = 1; n <= 40; ++n) {
    const auto all = enumerate_unit_subgroups(n);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front().order(), 1u);
    for (std::size_t a = 0; a < all.size(); ++a) {
      const auto& e = all[a].elements();
      for (int x : e) {
        EXPECT_EQ(gcd(x, n), 1) << n;
        for (int y : e) EXPECT_TRUE(all[a].contains(oracle::mod(static_cast<long long>(x) * y, n)));
      }
      for (std::size_t b = a + 1; b < all.size(); ++b) EXPECT_NE(e, all[b].elements());
    }
  }
  // (Z/8Z)^x is the Klein group: 1 + 3 order-two subgroups + itself.
  EXPECT_EQ(enumerate_unit_subgroups(8).size(), 5u);
  // (Z/7Z)^x is cyclic of order 6: subgroups of orders 1, 2, 3, 6.
  EXPECT_EQ(enumerate_unit_subgroups(7).size(), 4u);
}

TEST(OrbitPartition, CosineClasses) {
  EXPECT_EQ(classes_of(orbit_partition(sign_subgroup(7))),
            (std::vector<std::vector<int>>{{0}, {1, 6}, {2, 5}, {3, 4}}));
  EXPECT_EQ(classes_of(orbit_partition(sign_subgroup(8))),
            (std::vector<std::vector<int>>{{0}, {1, 7}, {2, 6}, {3, 5}, {4}}));
  const auto singletons = orbit_partition(trivial_subgroup(5));
  EXPECT_EQ(singletons.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(singletons.members(i), (std::vector<int>{static_cast<int>(i)}));
}

TEST(OrbitPartition, MatchesDirectOrbitComputation) {
  for (int n = 1; n <= 36; ++n)
    for (const auto& g : enumerate_unit_subgroups(n)) {
      const auto p = orbit_partition(g);
      EXPECT_EQ(p.classes(), oracle::orbits(n, g.elements())) << "n=" << n;
      std::size_t total = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        total += p.class_size(i);
        for (int x : p.members(i)) EXPECT_EQ(p.class_of(x), i);
      }
      EXPECT_EQ(total, static_cast<std::size_t>(n));
      EXPECT_EQ(p.members(0), (std::vector<int>{0}));
    }
}

TEST(SupercharacterTable, CosineValues) {
  for (int n : {5, 8, 12, 13}) {
    const auto t = supercharacter_table(orbit_partition(sign_subgroup(n)));
    const auto& p = t.partition();
    for (std::size_t j = 0; j < p.size(); ++j)
      for (std::size_t k = 0; k < p.size(); ++k)
        EXPECT_NEAR(std::abs(t(j, k) - static_cast<double>(p.class_size(j)) *
                                           std::cos(2.0 * std::numbers::pi * double(j * k) / n)),
                    0.0, 1e-12);
    for (std::size_t k = 0; k < p.size(); ++k) EXPECT_NEAR(std::abs(t(0, k) - 1.0), 0.0, 1e-15);
  }
}

TEST(SupercharacterTable, TrivialGroupGivesExponentials) {
  const int n = 9;
  const auto t = supercharacter_table(orbit_partition(trivial_subgroup(n)));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) EXPECT_NEAR(std::abs(t(j, k) - oracle::zeta_pow(j * k, n)), 0.0, 1e-12);
}

TEST(SupercharacterTable, ConstantOnSuperclassesAndOrthogonal) {
  for (int n : {12, 15, 16, 21}) {
    for (const auto& g : enumerate_unit_subgroups(n)) {
      const auto t = supercharacter_table(orbit_partition(g));
      const auto& p = t.partition();
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
          for (int y : p.members(j)) {
            Complex direct{};
            for (int x : p.members(i)) direct += oracle::zeta_pow(static_cast<long long>(x) * y, n);
            EXPECT_NEAR(std::abs(direct - t(i, j)), 0.0, 1e-9);
          }
        }
        for (std::size_t i2 = 0; i2 < p.size(); ++i2) {
          Complex acc{};
          for (std::size_t j = 0; j < p.size(); ++j)
            acc += static_cast<double>(p.class_size(j)) * t(i, j) * std::conj(t(i2, j));
          const double expected = i == i2 ? double(n * p.class_size(i)) : 0.0;
          EXPECT_NEAR(std::abs(acc - expected), 0.0, 1e-9);
        }
      }
    }
  }
}

TEST(StructureConstants, WorkedCountsAtSeven) {
  const auto c = structure_constants(orbit_partition(sign_subgroup(7)));
  EXPECT_EQ(c(3, 1, 3), 1);
  EXPECT_EQ(c(3, 3, 0), 2);
  EXPECT_EQ(c(3, 3, 1), 1);
  EXPECT_EQ(c(3, 3, 2), 0);
  EXPECT_EQ(c(3, 3, 3), 0);
}

TEST(StructureConstants, IdentityClassActsTrivially) {
  for (int n : {6, 10, 17}) {
    const auto c = structure_constants(orbit_partition(sign_subgroup(n)));
    const std::size_t m = c.partition().size();
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(c(0, j, k), j == k ? 1 : 0);
  }
}

TEST(StructureConstants, AgreesWithDefinitionAtEveryRepresentative) {
  for (int n : {9, 12, 20, 24}) {
    for (const auto& g : enumerate_unit_subgroups(n)) {
      const auto p = orbit_partition(g);
      const auto c = structure_constants(p);
      const auto cls = p.classes();
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
          long long weighted = 0;
          for (std::size_t k = 0; k < p.size(); ++k) {
            for (int z : p.members(k)) EXPECT_EQ(oracle::count_solutions(cls, i, j, z, n), c(i, j, k));
            weighted += c(i, j, k) * static_cast<long long>(p.class_size(k));
          }
          EXPECT_EQ(weighted, static_cast<long long>(p.class_size(i) * p.class_size(j)));
        }
    }
  }
}

TEST(UnitaryMatrix, FourierAndCosineCases) {
  const int n = 8;
  const ComplexMatrix f = unitary_matrix(supercharacter_table(orbit_partition(trivial_subgroup(n))));
  EXPECT_LE(max_abs_diff(f, dft_matrix(n)), 1e-14);

  const ComplexMatrix u = unitary_matrix(supercharacter_table(orbit_partition(sign_subgroup(n))));
  const double r2 = std::sqrt(2.0), s = std::sqrt(double(n));
  const std::vector<double> row0{1 / s, r2 / s, r2 / s, r2 / s, 1 / s};
  for (std::size_t k = 0; k < row0.size(); ++k) EXPECT_NEAR(std::abs(u(0, k) - row0[k]), 0.0, 1e-14);

  const ComplexMatrix u4 = unitary_matrix(supercharacter_table(orbit_partition(sign_subgroup(4))));
  const ComplexMatrix expected = to_complex(RealMatrix{{0.5, r2 / 2, 0.5}, {r2 / 2, 0.0, -r2 / 2}, {0.5, -r2 / 2, 0.5}});
  EXPECT_LE(max_abs_diff(u4, expected), 1e-14);
}

TEST(UnitaryMatrix, UnitaryWithFourthPowerIdentity) {
  for (int n : {10, 16, 21}) {
    for (const auto& g : enumerate_unit_subgroups(n)) {
      const ComplexMatrix u = unitary_matrix(supercharacter_table(orbit_partition(g)));
      const auto id = ComplexMatrix::identity(u.rows());
      EXPECT_LE(max_abs_diff(u * adjoint(u), id), 1e-10);
      EXPECT_LE(max_abs_diff(u * u * u * u, id), 1e-10);
    }
  }
}

TEST(GenericBasis, IdentityAndShift) {
  const auto c7 = structure_constants(orbit_partition(sign_subgroup(7)));
  EXPECT_EQ(generic_basis_matrix(c7, 0), RealMatrix::identity(4));

  const auto c5 = structure_constants(orbit_partition(trivial_subgroup(5)));
  const RealMatrix t = generic_basis_matrix(c5, 2);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) EXPECT_EQ(t(j, k), oracle::mod(k - j, 5) == 2 ? 1.0 : 0.0);

  EXPECT_THROW(generic_basis_matrix(c5, 5), IndexOutOfRange);
}

TEST(GenericBasis, IntertwinesWithUnitary) {
  for (int n : {12, 14}) {
    for (const auto& g : enumerate_unit_subgroups(n)) {
      const auto p = orbit_partition(g);
      const auto table = supercharacter_table(p);
      const auto u = unitary_matrix(table);
      const auto c = structure_constants(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        ComplexMatrix ud = u;
        for (std::size_t r = 0; r < u.rows(); ++r)
          for (std::size_t k = 0; k < u.cols(); ++k) ud(r, k) *= table(i, k);
        EXPECT_LE(max_abs_diff(to_complex(generic_basis_matrix(c, i)) * u, ud), 1e-10);
      }
    }
  }
}

TEST(CyclicGroup, RootPowersAreReduced) {
  const CyclicGroup g(12);
  EXPECT_EQ(g.reduce(-1), 11);
  EXPECT_EQ(g.reduce(25), 1);
  EXPECT_NEAR(std::abs(g.root_power(3) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g.root_power(1'000'000'000'003LL) - g.root_power(1'000'000'000'003LL % 12)), 0.0, 1e-15);
  EXPECT_THROW(CyclicGroup(0), InvalidModulus);
}
