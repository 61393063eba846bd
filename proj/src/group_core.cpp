#include "trigalg/group_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace trigalg {

int gcd(long long a, long long b) { return static_cast<int>(std::gcd(a, b)); }

CyclicGroup::CyclicGroup(int n) : n_(n) {
  if (n < 1) throw InvalidModulus(n);
}

int CyclicGroup::reduce(long long x) const {
  long long r = x % n_;
  if (r < 0) r += n_;
  return static_cast<int>(r);
}

Complex CyclicGroup::root_power(long long k) const {
  const int m = reduce(k);
  if (m == 0) return {1.0, 0.0};
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / n_;
  return {std::cos(angle), std::sin(angle)};
}

bool UnitSubgroup::contains(int residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

UnitSubgroup make_unit_subgroup(int n, const std::vector<long long>& generators) {
  const CyclicGroup g(n);
  UnitSubgroup out;
  out.n_ = n;
  for (long long raw : generators) {
    const int r = g.reduce(raw);
    if (gcd(r, n) != 1) throw NonUnitGenerator(raw, n);
    out.generators_.push_back(r);
  }

  std::set<int> closed{g.reduce(1)};
  std::vector<int> frontier{g.reduce(1)};
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (int gen : out.generators_) {
      const int y = g.reduce(static_cast<long long>(x) * gen);
      if (closed.insert(y).second) frontier.push_back(y);
    }
  }
  out.elements_.assign(closed.begin(), closed.end());
  return out;
}

UnitSubgroup trivial_subgroup(int n) { return make_unit_subgroup(n); }

UnitSubgroup sign_subgroup(int n) { return make_unit_subgroup(n, {-1}); }

std::vector<UnitSubgroup> enumerate_unit_subgroups(int n) {
  const CyclicGroup g(n);
  std::vector<int> units;
  for (int u = 0; u < n; ++u)
    if (gcd(u, n) == 1) units.push_back(u);

  // Every subgroup is a join of cyclic ones; join until nothing new appears.
  std::map<std::vector<int>, UnitSubgroup> found;
  std::vector<UnitSubgroup> frontier;
  for (int u : units) {
    auto s = make_unit_subgroup(n, {u});
    if (found.emplace(s.elements(), s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<UnitSubgroup> next;
    std::vector<UnitSubgroup> known;
    for (const auto& [_, s] : found) known.push_back(s);
    for (const auto& a : frontier) {
      for (const auto& b : known) {
        std::vector<long long> gens(a.generators().begin(), a.generators().end());
        gens.insert(gens.end(), b.generators().begin(), b.generators().end());
        auto s = make_unit_subgroup(n, gens);
        if (found.emplace(s.elements(), s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }

  std::vector<UnitSubgroup> out;
  for (auto& [_, s] : found) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const UnitSubgroup& a, const UnitSubgroup& b) {
    return a.order() < b.order();
  });
  return out;
}

std::size_t OrbitPartition::class_of(long long residue) const {
  long long r = residue % n_;
  if (r < 0) r += n_;
  return class_of_[static_cast<std::size_t>(r)];
}

std::vector<std::size_t> OrbitPartition::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes_.size());
  for (const auto& c : classes_) sizes.push_back(c.size());
  return sizes;
}

OrbitPartition orbit_partition(const UnitSubgroup& gamma) {
  const int n = gamma.modulus();
  const CyclicGroup g(n);
  OrbitPartition p;
  p.n_ = n;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  p.class_of_.assign(static_cast<std::size_t>(n), kUnassigned);
  for (int x = 0; x < n; ++x) {
    if (p.class_of_[x] != kUnassigned) continue;
    std::set<int> orbit;
    for (int u : gamma.elements()) orbit.insert(g.reduce(static_cast<long long>(u) * x));
    const std::size_t idx = p.classes_.size();
    for (int y : orbit) p.class_of_[y] = idx;
    p.classes_.emplace_back(orbit.begin(), orbit.end());
  }
  return p;
}

Complex SupercharacterTable::evaluate(std::size_t i, long long y) const {
  const CyclicGroup g(partition_.modulus());
  Complex acc{};
  for (int x : partition_.members(i)) acc += g.root_power(static_cast<long long>(x) * y);
  return acc;
}

SupercharacterTable supercharacter_table(const OrbitPartition& p) {
  SupercharacterTable t;
  t.partition_ = p;
  const std::size_t m = p.size();
  t.values_ = ComplexMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.values_(i, j) = t.evaluate(i, p.representative(j));
  return t;
}

std::int64_t StructureConstants::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = counts_.find({i, j, k});
  return it == counts_.end() ? 0 : it->second;
}

StructureConstants structure_constants(const OrbitPartition& p) {
  const int n = p.modulus();
  const CyclicGroup g(n);
  std::map<StructureConstants::Key, std::int64_t> counts;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const int z = p.representative(k);
    for (int x = 0; x < n; ++x) {
      const std::size_t i = p.class_of(x);
      const std::size_t j = p.class_of(g.reduce(static_cast<long long>(z) - x));
      ++counts[{i, j, k}];
    }
  }
  return {p, std::move(counts)};
}

ComplexMatrix unitary_matrix(const SupercharacterTable& t) {
  const auto& p = t.partition();
  const std::size_t m = p.size();
  const double sqrt_n = std::sqrt(static_cast<double>(p.modulus()));
  ComplexMatrix u(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double scale = std::sqrt(static_cast<double>(p.class_size(j))) /
                           (std::sqrt(static_cast<double>(p.class_size(i))) * sqrt_n);
      u(i, j) = t(i, j) * scale;
    }
  }
  return u;
}

RealMatrix generic_basis_matrix(const StructureConstants& c, std::size_t i) {
  const auto& p = c.partition();
  const std::size_t m = p.size();
  if (i >= m) {
    throw IndexOutOfRange("basis index " + std::to_string(i) + " outside [0, " +
                          std::to_string(m) + ")");
  }
  RealMatrix t(m, m);
  for (const auto& [key, count] : c.counts()) {
    if (key[0] != i) continue;
    const std::size_t j = key[1];
    const std::size_t k = key[2];
    t(j, k) = static_cast<double>(count) * std::sqrt(static_cast<double>(p.class_size(k))) /
              std::sqrt(static_cast<double>(p.class_size(j)));
  }
  return t;
}

}  // namespace trigalg
