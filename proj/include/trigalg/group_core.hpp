#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "trigalg/matrix.hpp"

namespace trigalg {

/// The additive group Z/nZ together with the root of unity exp(-2*pi*i/n).
class CyclicGroup {
 public:
  explicit CyclicGroup(int n);

  int order() const { return n_; }
  int reduce(long long x) const;

  /// zeta^k with zeta = exp(-2*pi*i/n). Evaluated from the reduced angle
  /// k mod n, never by repeated multiplication.
  Complex root_power(long long k) const;

 private:
  int n_;
};

/// A subgroup of the unit group (Z/nZ)^x.
class UnitSubgroup {
 public:
  int modulus() const { return n_; }
  const std::vector<int>& generators() const { return generators_; }
  /// Sorted ascending.
  const std::vector<int>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(int residue) const;

 private:
  friend UnitSubgroup make_unit_subgroup(int n, const std::vector<long long>& generators);
  int n_ = 1;
  std::vector<int> generators_;
  std::vector<int> elements_;
};

/// Multiplicative closure of {1} and the generators modulo n. Generators are
/// reduced mod n first, so -1 may be passed for n-1.
/// Throws NonUnitGenerator for a generator sharing a factor with n.
UnitSubgroup make_unit_subgroup(int n, const std::vector<long long>& generators = {});

/// Gamma = {1}: singleton orbits, the Fourier case.
UnitSubgroup trivial_subgroup(int n);
/// Gamma = {1, -1}: the cosine case.
UnitSubgroup sign_subgroup(int n);

/// Every subgroup of (Z/nZ)^x, each listed once, ordered by (order, elements).
std::vector<UnitSubgroup> enumerate_unit_subgroups(int n);

/// Orbits of Z/nZ under multiplication by a unit subgroup.
///
/// Classes are indexed by their least element in ascending order, so class 0
/// is always {0}. Under Gamma = {+-1} this makes X_j the class containing j.
class OrbitPartition {
 public:
  int modulus() const { return n_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& members(std::size_t i) const { return classes_[i]; }
  int representative(std::size_t i) const { return classes_[i].front(); }
  std::size_t class_of(long long residue) const;
  std::size_t class_size(std::size_t i) const { return classes_[i].size(); }
  std::vector<std::size_t> class_sizes() const;

 private:
  friend OrbitPartition orbit_partition(const UnitSubgroup& gamma);
  int n_ = 1;
  std::vector<std::vector<int>> classes_;
  std::vector<std::size_t> class_of_;
};

OrbitPartition orbit_partition(const UnitSubgroup& gamma);

/// values(i, j) = sigma_i(X_j) = sum_{x in X_i} zeta^{x y} for the least y in X_j.
class SupercharacterTable {
 public:
  const OrbitPartition& partition() const { return partition_; }
  const ComplexMatrix& values() const { return values_; }
  Complex operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  /// sigma_i evaluated at an arbitrary residue y (not necessarily a
  /// representative). Used to check constancy on superclasses.
  Complex evaluate(std::size_t i, long long y) const;

 private:
  friend SupercharacterTable supercharacter_table(const OrbitPartition& p);
  OrbitPartition partition_;
  ComplexMatrix values_;
};

SupercharacterTable supercharacter_table(const OrbitPartition& p);

/// Sparse c_{ijk}: the number of (x, y) in X_i x X_j with x + y = z, z the
/// least element of X_k. Zero counts are not stored.
class StructureConstants {
 public:
  using Key = std::array<std::size_t, 3>;

  StructureConstants() = default;
  StructureConstants(OrbitPartition p, std::map<Key, std::int64_t> counts)
      : partition_(std::move(p)), counts_(std::move(counts)) {}

  const OrbitPartition& partition() const { return partition_; }
  const std::map<Key, std::int64_t>& counts() const { return counts_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.counts_ == b.counts_;
  }

 private:
  OrbitPartition partition_;
  std::map<Key, std::int64_t> counts_;
};

/// Counts c_{ijk} orbit by orbit: for each class k, every x in Z/nZ is paired
/// with y = z_k - x. Cost O(n * M).
StructureConstants structure_constants(const OrbitPartition& p);

/// U(i, j) = sigma_i(X_j) sqrt|X_j| / (sqrt|X_i| sqrt n).
ComplexMatrix unitary_matrix(const SupercharacterTable& t);

/// T_i(j, k) = c_{ijk} sqrt|X_k| / sqrt|X_j|.
RealMatrix generic_basis_matrix(const StructureConstants& c, std::size_t i);

int gcd(long long a, long long b);

}  // namespace trigalg
