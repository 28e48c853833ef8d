#pragma once

// Axiom suites on windowed algebras: (T1)-(T6) for a Lie algebra with toral
// subalgebra, (D1)-(D12) for a Z^nu-graded algebra, the Serre relations of
// the split simple subalgebra, and tameness.

#include "ealie/decomp.hpp"
#include "ealie/report.hpp"

#include <cstdint>

namespace ealie {

struct SuiteOptions {
  /// Invariance is exhaustive up to this many triples, sampled beyond.
  std::size_t invariance_limit = 100000;
  std::size_t invariance_samples = 20000;
  /// Random combinations tested per root space besides the basis.
  int random_combinations = 2;
  /// Exponent for local nilpotency; failures are retried with the larger one.
  int nilpotency = 9;
  int nilpotency_escalated = 17;
  /// Extra lattice width for spanning computations.
  int margin = 2;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument for nu > 0 when the toral basis does not see
/// the lattice grading (affinize such algebras first).
AxiomReport check_T(const RootSystemWindow& win, const SuiteOptions& opt = {});

AxiomReport check_D(const RootSystemWindow& win, const SuiteOptions& opt = {});

struct SerreResult {
  bool ok = false;
  std::vector<Root> simple;
  /// Standard convention A_ij = alpha_i(h_j) = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> expected;
  /// All generators have lattice degree zero.
  bool degree_zero = false;
  /// Offending (i, j) and the nonzero residual when a relation fails.
  std::pair<int, int> offending{-1, -1};
  std::string relation;
  Vec residual;
};

/// Preimages at lattice degree zero of the standard simple roots of the
/// finite root system (fallback: a base of the window's finite image).
std::vector<Root> default_simple_preimages(const RootSystemWindow& win);

/// Builds e_i in L_{alpha_i}, f_i = e_{-alpha_i}, h_i from sl2 searches and
/// checks [e_i, f_j] = delta_ij h_i, (ad e_i)^{1 - c_ij} e_j = 0 and
/// (ad f_i)^{1 - c_ij} f_j = 0 with c_ij = alpha_j(h_i).
SerreResult serre_check(const RootSystemWindow& win, const std::vector<Root>& simple);

struct TamenessResult {
  bool tame = false;
  /// Centralizer of the core generators, per window degree.
  std::map<Lattice, std::vector<Vec>> centralizer;
  std::string witness;
  /// L_c^perp agrees with Z(L_c) on the window.
  bool perp_is_center = false;
  CoreCenter core;
};

TamenessResult tameness_check(const RootSystemWindow& win, int margin = 2);

}  // namespace ealie
