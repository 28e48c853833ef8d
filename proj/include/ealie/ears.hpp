#pragma once

// Extended affine root system axioms (R1)-(R6), semilattices and the support
// sets S, L, E of a windowed root system.

#include "ealie/decomp.hpp"
#include "ealie/report.hpp"

#include <functional>
#include <optional>
#include <set>

namespace ealie {

/// A root set in Q^l + Q^nu with the form given on the first summand and the
/// lattice summand in its radical. `member` decides membership of arbitrary
/// points; nullopt means the point lies outside what the data can decide.
struct RootData {
  int ell = 0;
  int nu = 0;
  int window = 0;
  QMatrix finite_form;
  std::vector<Root> roots;  // sorted, lattice parts within the window
  std::function<std::optional<bool>(const Root&)> member;

  Rational inner(const Root& a, const Root& b) const;
  Rational norm(const Root& a) const { return inner(a, a); }
  bool isotropic(const Root& a) const { return sgn(norm(a)) == 0; }
  std::vector<Root> non_isotropic() const;
  std::vector<Root> isotropic_roots() const;
  /// Finite parts of the non-isotropic roots.
  std::set<std::vector<int>> finite_image() const;
};

/// Membership is exact: root spaces outside the window are computed on demand.
RootData root_data(const RootSystemWindow& win);
/// Membership is known only for lattice parts within the window.
RootData root_data_from_set(int ell, int nu, QMatrix finite_form, const std::set<Root>& roots, int window);

/// Base of a finite root system: indecomposable roots positive for a generic
/// functional.
std::vector<std::vector<int>> simple_system(const std::set<std::vector<int>>& roots);

/// Rank of the subgroup of Z^nu generated by the lattice parts of R^0.
int isotropic_rank(const RootData& r);

/// 0 in S, S + 2S within S (inside the window), S = -S, full rank.
Verdict check_semilattice(const std::set<Lattice>& s, int nu, int window);

struct SupportSets {
  std::set<Lattice> S;
  /// Absent when the finite system has a single root length.
  std::optional<std::set<Lattice>> L;
  /// Absent when there are no extra-long roots.
  std::optional<std::set<Lattice>> E;
  std::map<std::vector<int>, std::set<Lattice>> per_root;
  bool partition_ok = false;
  bool containment_ok = false;
  bool span_ok = false;
  std::string problem;
};

SupportSets support_sets(const RootData& r);

/// (R1)-(R5) decide the report; (R6) is informational and records reducedness.
AxiomReport check_ears_axioms(const RootData& r, int string_range = 5);

}  // namespace ealie
