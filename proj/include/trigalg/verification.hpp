#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trigalg/group_core.hpp"
#include "trigalg/matrix.hpp"

namespace trigalg {

/// max |off-diagonal| of Q^* M Q. Throws DimensionMismatch when not conformable.
double diagonalization_residual(const ComplexMatrix& q, const ComplexMatrix& m);

/// Structure constants by full enumeration of Z/nZ x Z/nZ: every pair (x, y)
/// is classified by (class(x), class(y)) and counted at z = x + y whenever z is
/// the least element of its class. Independent of structure_constants().
StructureConstants exhaustive_structure_constants(const UnitSubgroup& gamma);

/// Number of (i, j, k, z) with z in X_k whose solution count differs from the
/// count at the least representative of X_k. Zero when c_{ijk} is well defined.
std::size_t representative_violations(const OrbitPartition& p);

/// Tolerance for a named check; throws std::out_of_range for unknown names.
double check_tolerance(std::string_view name);

struct CheckResult {
  std::string name;
  int n = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Exception message when the check threw; empty otherwise.
  std::string detail;
};

struct SuiteReport {
  int n_min = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::vector<CheckResult> failures() const;
  bool all_passed() const;
  /// One line per check: "PASS  <name> n=<n>  residual=<r>  tol=<t>".
  std::string to_text() const;
};

inline constexpr std::uint64_t kDefaultSuiteSeed = 0x5eed2024ULL;

/// Runs every invariant and golden comparison for each n in [n_min, n_max].
/// Randomized checks draw from a generator seeded by (seed, check, n), so a
/// report is reproducible cell by cell.
SuiteReport run_suite(int n_min, int n_max, std::uint64_t seed = kDefaultSuiteSeed);

}  // namespace trigalg
