// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Reference quantities come from the brute-force oracles in oracles.hpp, not
// from the library code paths being checked.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "oracles.hpp"
#include "trigalg/circulant_algebra.hpp"
#include "trigalg/dct_algebra.hpp"
#include "trigalg/dst_algebra.hpp"
#include "trigalg/errors.hpp"
#include "trigalg/group_core.hpp"
#include "trigalg/reference_examples.hpp"
#include "trigalg/transforms.hpp"
#include "trigalg/verification.hpp"

using namespace trigalg;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome worst_within(double worst, double tol) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst=%.3e tol=%.0e", worst, tol);
  return {worst <= tol, buf};
}

double unitary_defect(const ComplexMatrix& q) {
  return max_abs_diff(q * adjoint(q), ComplexMatrix::identity(q.rows()));
}

ExactMatrix negated(ExactMatrix m) {
  for (auto& v : m.data()) v = -v;
  return m;
}

ComplexMatrix dense_real(std::size_t size, const std::function<double(int, int)>& f) {
  ComplexMatrix m(size, size);
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t k = 0; k < size; ++k) m(j, k) = f(static_cast<int>(j), static_cast<int>(k));
  return m;
}

ComplexMatrix oracle_dft(int n) {
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = oracle::zeta_pow(static_cast<long long>(j) * k, n) / std::sqrt(n);
  return m;
}

// Criterion 1
Outcome golden_dct() {
  std::size_t bad = 0;
  bad += dct_basis(7, 3) != reference::cosine_basis_n7_i3();
  bad += dct_basis(8, 3) != reference::cosine_basis_n8_i3();
  const auto b10 = reference::cosine_basis_n10();
  const auto b11 = reference::cosine_basis_n11();
  for (std::size_t i = 0; i < 6; ++i) {
    bad += dct_basis(10, i) != b10[i];
    bad += dct_basis(11, i) != b11[i];
  }
  return {bad == 0, std::to_string(14 - bad) + "/14 matrices exact"};
}

// Criterion 2
Outcome golden_dst() {
  std::size_t bad = 0;
  const auto s = reference::sine_s_basis_n11();
  const auto t = reference::sine_t_basis_n11_displayed();
  for (std::size_t i = 1; i <= 5; ++i) {
    bad += dst_s_basis(11, i) != s[i - 1];
    bad += negated(dst_t_basis(11, i)) != t[i - 1];
  }
  const auto shown = reference::sine_t_general_n11();
  for (int v = 1; v <= 5; ++v) {
    std::vector<ExactQuadratic> e(5);
    e[v - 1] = 1;
    bad += coefficient_matrix(shown, v) != dst_t_general_exact(11, e);
  }
  return {bad == 0, std::to_string(15 - bad) + "/15 exact (T basis up to global sign -1)"};
}

// Criterion 3
Outcome unitarity() {
  double worst = 0.0;
  for (int n = 2; n <= 256; ++n) {
    const ComplexMatrix f = dft_matrix(n);
    const ComplexMatrix u = to_complex(dct_matrix(n));
    const ComplexMatrix w = to_complex(dst_matrix(n));
    const std::size_t nd = dct_size(n), ns = dst_size(n);
    worst = std::max(worst, max_abs_diff(f, oracle_dft(n)));
    worst = std::max(worst, max_abs_diff(u, dense_real(nd, [&](int j, int k) { return oracle::dct_entry(n, j, k); })));
    worst = std::max(worst,
                     max_abs_diff(w, dense_real(ns, [&](int j, int k) { return oracle::dst_entry(n, j + 1, k + 1); })));
    worst = std::max({worst, unitary_defect(f), unitary_defect(u)});
    if (ns > 0) worst = std::max(worst, unitary_defect(w));
    const ComplexMatrix f2 = f * f;
    const ComplexMatrix parity = dense_real(n, [&](int j, int k) { return oracle::mod(-j, n) == k ? 1.0 : 0.0; });
    worst = std::max(worst, max_abs_diff(f2, parity));
    worst = std::max(worst, max_abs_diff(f2 * f2, ComplexMatrix::identity(n)));
  }
  return worst_within(worst, 1e-10);
}

// Criterion 4
Outcome diagonalization() {
  double residual = 0.0, eigen = 0.0;
  for (int n = 2; n <= 64; ++n) {
    const ComplexMatrix u = to_complex(dct_matrix(n));
    for (std::size_t i = 0; i < dct_size(n); ++i) {
      const ComplexMatrix t = to_complex(dct_basis(n, i));
      residual = std::max(residual, diagonalization_residual(u, t));
      const double size = (i == 0 || 2 * static_cast<int>(i) == n) ? 1.0 : 2.0;
      const auto d = diagonal(u * t * u);
      for (std::size_t k = 0; k < d.size(); ++k)
        eigen = std::max(eigen, std::abs(d[k] - size * std::cos(2.0 * oracle::kPi * i * k / n)));
    }
    const ComplexMatrix w = to_complex(dst_matrix(n));
    for (std::size_t i = 1; i <= dst_size(n); ++i) {
      residual = std::max(residual, diagonalization_residual(w, to_complex(dst_s_basis(n, i))));
      const ComplexMatrix t = to_complex(dst_t_basis(n, i));
      residual = std::max(residual, diagonalization_residual(w, t));
      const auto d = diagonal(w * t * w);
      for (std::size_t k = 0; k < d.size(); ++k)
        eigen = std::max(eigen, std::abs(d[k] - 2.0 * std::cos(2.0 * oracle::kPi * i * (k + 1) / n)));
    }
    const ComplexMatrix f = dft_matrix(n);
    for (int i = 0; i < n; ++i) {
      const ComplexMatrix c = to_complex(circulant_shift_basis(n, i));
      residual = std::max(residual, diagonalization_residual(f, c));
      const auto d = diagonal(adjoint(f) * c * f);
      for (int k = 0; k < n; ++k)
        eigen = std::max(eigen, std::abs(d[k] - oracle::zeta_pow(static_cast<long long>(i) * k, n)));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "residual=%.3e tol=1e-10  eigenvalues=%.3e tol=1e-09", residual, eigen);
  return {residual <= 1e-10 && eigen <= 1e-9, buf};
}

// Criterion 5
std::vector<std::vector<int>> gamma_families(int n) {
  std::vector<int> units;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  auto powers = [&](int e) {
    std::set<int> s;
    for (int u : units) {
      long long p = 1;
      for (int r = 0; r < e; ++r) p = p * u % n;
      s.insert(static_cast<int>(p));
    }
    return std::vector<int>(s.begin(), s.end());
  };
  std::vector<std::vector<int>> out{{1}, {n - 1}, units, powers(2), powers(3)};
  auto pm_squares = powers(2);
  pm_squares.push_back(n - 1);
  out.push_back(pm_squares);
  for (int u : units)
    if (u != 1 && u != n - 1) {
      out.push_back({u});
      break;
    }
  return out;
}

Outcome structure_constant_agreement() {
  std::size_t mismatches = 0, cases = 0;
  for (int n = 2; n <= 64; ++n) {
    for (const auto& gens : gamma_families(n)) {
      ++cases;
      std::vector<long long> g(gens.begin(), gens.end());
      const UnitSubgroup gamma = make_unit_subgroup(n, g);
      const OrbitPartition p = orbit_partition(gamma);
      const StructureConstants fast = structure_constants(p);
      const StructureConstants brute = exhaustive_structure_constants(gamma);
      mismatches += !(fast == brute);
      const auto classes = oracle::orbits(n, gens);
      if (classes != p.classes()) {
        ++mismatches;
        continue;
      }
      const std::size_t m = classes.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k) {
            const long long at_least = oracle::count_solutions(classes, i, j, classes[k].front(), n);
            if (fast(i, j, k) != at_least) ++mismatches;
            for (int z : classes[k])
              if (oracle::count_solutions(classes, i, j, z, n) != at_least) ++mismatches;
          }
    }
  }
  return {mismatches == 0, std::to_string(cases) + " (n, Gamma) cases, " + std::to_string(mismatches) + " mismatches"};
}

// Criterion 6
Outcome closure() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int n : {7, 8, 10, 11, 12}) {
    const std::size_t size = dct_size(n);
    for (int trial = 0; trial < 100; ++trial) {
      const DctElement a(n, oracle::random_vector(rng, size));
      const DctElement b(n, oracle::random_vector(rng, size));
      const DctElement ab = dct_multiply(a, b);
      worst = std::max(worst, max_abs_diff(dct_general(ab), dct_general(a) * dct_general(b)));
      const auto la = dct_eigenvalues(a), lb = dct_eigenvalues(b), lab = dct_eigenvalues(ab);
      for (std::size_t k = 0; k < size; ++k) worst = std::max(worst, std::abs(lab[k] - la[k] * lb[k]));
    }
  }
  return worst_within(worst, 1e-9);
}

// Criterion 7
Outcome membership() {
  std::mt19937_64 rng(7);
  double worst = 0.0, weakest_rejection = 1e300;
  std::size_t accepted_nonmembers = 0;
  auto reject = [&](const std::function<void()>& f) {
    try {
      f();
      ++accepted_nonmembers;
    } catch (const NotInAlgebra& e) {
      weakest_rejection = std::min(weakest_rejection, e.residual());
    }
  };
  for (int n : {8, 11, 16}) {
    const std::size_t nd = dct_size(n), ns = dst_size(n);
    for (int trial = 0; trial < 100; ++trial) {
      const DctElement a(n, oracle::random_vector(rng, nd));
      worst = std::max(worst, max_abs_diff(dct_membership(dct_general(a), n).params(), a.params()));
      const DstElementS s(n, oracle::random_vector(rng, ns));
      worst = std::max(worst, max_abs_diff(dst_membership(dst_s_general(s), n).params(), s.params()));
      const CirculantElement c(n, oracle::random_vector(rng, n));
      worst = std::max(worst, max_abs_diff(circulant_membership(circulant_general(c), n).params(), c.params()));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix md = oracle::random_matrix(rng, nd, nd);
      const ComplexMatrix ms = oracle::random_matrix(rng, ns, ns);
      const ComplexMatrix mc = oracle::random_matrix(rng, n, n);
      reject([&] { dct_membership(md, n); });
      reject([&] { dst_membership(ms, n); });
      reject([&] { circulant_membership(mc, n); });
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "roundtrip=%.3e tol=1e-10  min rejection residual=%.3e  accepted non-members=%zu",
                worst, weakest_rejection, accepted_nonmembers);
  return {worst <= 1e-10 && weakest_rejection > 1e-3 && accepted_nonmembers == 0, buf};
}

// Criterion 8
bool pairwise_distinct(const std::vector<Complex>& v) {
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (std::abs(v[a] - v[b]) <= 1e-8) return false;
  return true;
}

Outcome generator_criterion() {
  std::size_t mismatches = 0, cases = 0;
  for (int n = 1; n <= 24; ++n) {
    const ComplexMatrix u = to_complex(dct_matrix(n));
    for (std::size_t i = 0; i < dct_size(n); ++i, ++cases) {
      const bool distinct = pairwise_distinct(diagonal(u * to_complex(dct_basis(n, i)) * u));
      mismatches += distinct != (std::gcd(static_cast<int>(i), n) == 1);
      mismatches += dct_is_generator(n, i) != (std::gcd(static_cast<int>(i), n) == 1);
    }
    const ComplexMatrix w = to_complex(dst_matrix(n));
    for (std::size_t i = 1; i <= dst_size(n); ++i, ++cases) {
      const bool distinct = pairwise_distinct(diagonal(w * to_complex(dst_t_basis(n, i)) * w));
      mismatches += distinct != (std::gcd(static_cast<int>(i), n) == 1);
      mismatches += dst_is_generator(n, i) != (std::gcd(static_cast<int>(i), n) == 1);
    }
  }
  return {mismatches == 0, std::to_string(cases) + " (n, i) cases, " + std::to_string(mismatches) + " mismatches"};
}

// Criterion 9. Direct evaluation of the cross sums, 1-based with zero padding.
std::vector<std::pair<std::size_t, std::size_t>> cross_sum_failures(const ExactMatrix& m) {
  const std::size_t size = m.rows();
  auto at = [&](std::size_t r, std::size_t c) {
    return (r < 1 || c < 1 || r > size || c > size) ? ExactQuadratic(0) : m(r - 1, c - 1);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 1; r <= size; ++r)
    for (std::size_t c = 1; c <= size; ++c)
      if (at(r - 1, c) + at(r + 1, c) != at(r, c - 1) + at(r, c + 1)) out.emplace_back(r, c);
  return out;
}

Outcome cross_sum() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-9, 9);
  std::size_t even_violations = 0, odd_outside_band = 0, odd_total = 0;
  for (int n : {8, 10, 16, 11}) {
    const std::size_t size = dst_size(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ExactQuadratic> s;
      for (std::size_t i = 0; i < size; ++i) s.emplace_back(d(rng));
      const ExactMatrix m = dst_s_general_exact(n, s);
      const auto fails = cross_sum_failures(m);
      if (cross_sum_check(m).size() != fails.size()) ++even_violations;
      if (n % 2 == 0) {
        even_violations += fails.size();
      } else {
        odd_total += fails.size();
        for (const auto& [r, c] : fails) odd_outside_band += r != size && c != size;
      }
    }
  }
  return {even_violations == 0 && odd_total > 0 && odd_outside_band == 0,
          "even violations=" + std::to_string(even_violations) + "  n=11 violations=" + std::to_string(odd_total) +
              " (outside last row/column: " + std::to_string(odd_outside_band) + ")"};
}

// Criterion 10
Outcome restriction() {
  std::mt19937_64 rng(10);
  double worst = 0.0;
  for (int n = 1; n <= 64; ++n) {
    const ComplexMatrix u = to_complex(dct_matrix(n));
    const ComplexMatrix v = dst_matrix_complex(n);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexVector t = oracle::random_vector(rng, dct_size(n));
      worst = std::max(worst, oracle::max_diff(apply_dft(embed_even(t, n)).samples,
                                               embed_even(oracle::apply(u, t), n).samples));
      if (dst_size(n) == 0) continue;
      const ComplexVector s = oracle::random_vector(rng, dst_size(n));
      worst = std::max(worst, oracle::max_diff(apply_dft(embed_odd(s, n)).samples,
                                               embed_odd(oracle::apply(v, s), n).samples));
    }
  }
  return worst_within(worst, 1e-10);
}

// Criterion 11
Outcome trig_identities() {
  double worst = 0.0;
  for (int n = 1; n <= 32; ++n) {
    std::vector<Signal> tau;
    for (int j = 0; j < n; ++j) tau.push_back(Signal::tau(n, j));
    auto at = [&](long long j, int x) { return tau[oracle::mod(j, n)](x); };
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < n; ++x)
        worst = std::max(worst, std::abs(at(j, x) - Complex(0.0, -2.0 * std::sin(2.0 * oracle::kPi * j * x / n))));

    const auto table = supercharacter_table(orbit_partition(sign_subgroup(n)));
    const auto& p = table.partition();
    auto sigma_scaled = [&](long long m, int x) {
      const std::size_t c = p.class_of(m);
      return 2.0 / static_cast<double>(p.class_size(c)) * table.evaluate(c, x);
    };
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x) {
          const Complex lhs = at(j, x) * std::conj(at(k, x)) + at(1, x) * std::conj(at(j + k + 1, x));
          worst = std::max(worst, std::abs(lhs - at(j + 1, x) * std::conj(at(k + 1, x))));
          const Complex product = at(j, x) * std::conj(at(k, x));
          worst = std::max(worst, std::abs(product - (sigma_scaled(j - k, x) - sigma_scaled(j + k, x))));
        }
  }
  return worst_within(worst, 1e-10);
}

Outcome full_suite() {
  const SuiteReport r = run_suite(2, 64);
  return {r.all_passed(), std::to_string(r.checks.size() - r.failures().size()) + "/" +
                              std::to_string(r.checks.size()) + " checks passed"};
}

}  // namespace

int main() {
  struct Criterion {
    std::string label;
    double seconds_limit;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {"1 golden DCT bases", 1.0, golden_dct},
      {"2 golden DST bases", 1.0, golden_dst},
      {"3 unitarity n<=256", 30.0, unitarity},
      {"4 diagonalization n<=64", 60.0, diagonalization},
      {"5 structure constants n<=64", 30.0, structure_constant_agreement},
      {"6 algebra closure", 0.0, closure},
      {"7 membership round trip", 0.0, membership},
      {"8 generator criterion n<=24", 0.0, generator_criterion},
      {"9 cross-sum pattern", 0.0, cross_sum},
      {"10 restriction property n<=64", 0.0, restriction},
      {"11 trig identities n<=32", 0.0, trig_identities},
      {"full verify 2..64", 300.0, full_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.seconds_limit <= 0.0 || secs < c.seconds_limit;
    const bool ok = o.ok && in_time;
    failed += !ok;
    std::printf("%s  criterion %-32s %8.2fs%s  %s\n", ok ? "PASS" : "FAIL", c.label.c_str(), secs,
                in_time ? "" : " (over time limit)", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
