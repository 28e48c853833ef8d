#pragma once

// Affinization L = G + C + D, the extension L = A + E by a cocycle, and the
// nullity-zero example G tensor Q(sqrt p_1, ..., sqrt p_k).

#include "ealie/algebra.hpp"
#include "ealie/matrix_algebras.hpp"

#include <functional>
#include <stdexcept>

namespace ealie {

/// G + C + D with [x, y]' = [x, y] + sum_i (d_i x, y) c_i, c_i central,
/// [d_i, x] = n_i x on G^{(n_1..n_nu)}, (c_i, d_j) = delta_ij.
/// Keys: {0, G-key...}, {1, i} for c_i, {2, i} for d_i.
class AffinizedAlgebra : public LieAlgebra {
 public:
  explicit AffinizedAlgebra(AlgebraPtr g);

  std::string label() const override;
  std::string root_type() const override { return g_->root_type(); }
  int root_rank() const override { return g_->root_rank(); }
  int weight_dim() const override { return g_->weight_dim(); }
  int grading_rank() const override { return nu_; }

  std::vector<Vec> homogeneous_basis(const Lattice& sigma) const override;
  Vec bracket(const Vec& x, const Vec& y) const override;
  Rational form(const Vec& x, const Vec& y) const override;
  ToralBasis toral() const override;
  Lattice degree_of_key(const Key& k) const override;
  std::string describe(const Vec& x) const override;

  const AlgebraPtr& base() const { return g_; }
  Vec lift(const Vec& g) const;
  /// G-component of an element.
  Vec project(const Vec& x) const;
  Vec central(int i) const { return Vec::unit({1, i}); }
  Vec derivation(int i) const { return Vec::unit({2, i}); }
  /// d_i applied to a G-element.
  Vec apply_degree(int i, const Vec& g) const;

 private:
  AlgebraPtr g_;
  int nu_;
};

struct GradingViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds the affinization after checking on degrees |sigma|_inf <= probe that
/// the form is graded and that brackets add degrees; throws GradingViolation
/// with the offending pair otherwise.
std::shared_ptr<AffinizedAlgebra> affinize(AlgebraPtr g, int probe = 1);

/// Data of an extension A + E. E has basis e_0..e_{m-1}; its bracket and
/// the form on E are given by structure constants.
struct ExtensionSpec {
  AlgebraPtr base;
  int e_dim = 0;
  /// [e_j, e_k]_E as coordinates in E (m-vector); empty means abelian.
  std::function<std::vector<Rational>(int, int)> e_bracket;
  /// rho(e_j) applied to an element of A (degree-zero derivation); empty means 0.
  std::function<Vec(int, const Vec&)> rho;
  /// tau(e_j, e_k) in A; empty means 0.
  std::function<Vec(int, int)> tau;
  /// Gram matrix of the form on E (m x m); (A, E) = 0.
  QMatrix e_form;
  /// Indices of E-basis elements added to the toral basis.
  std::vector<int> e_toral;
  /// Degree-zero elements of A on which the derivation identities are tested.
  int probe = 1;
};

/// Failure of one of the extension conditions, with the triple or pair.
struct ExtensionViolation : std::runtime_error {
  ExtensionViolation(const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), witness(std::move(witness)) {}
  std::vector<int> witness;
};

/// L = A + E with [a + x, b + y] = [a, b] + rho(x) b - rho(y) a + [x, y]_E + tau(x, y).
/// Keys: {0, A-key...} and {1, j} for e_j.
class ExtensionAlgebra : public LieAlgebra {
 public:
  /// Verifies antisymmetry of tau, ad tau(x, y) = [rho x, rho y] - rho [x, y]_E
  /// on probe elements, and the cyclic cocycle identity; throws
  /// ExtensionViolation otherwise.
  explicit ExtensionAlgebra(ExtensionSpec spec);

  std::string label() const override;
  std::string root_type() const override { return spec_.base->root_type(); }
  int root_rank() const override { return spec_.base->root_rank(); }
  int weight_dim() const override { return spec_.base->weight_dim(); }
  int grading_rank() const override { return spec_.base->grading_rank(); }

  std::vector<Vec> homogeneous_basis(const Lattice& sigma) const override;
  Vec bracket(const Vec& x, const Vec& y) const override;
  Rational form(const Vec& x, const Vec& y) const override;
  ToralBasis toral() const override;
  Lattice degree_of_key(const Key& k) const override;
  std::string describe(const Vec& x) const override;

  Vec lift(const Vec& a) const;
  Vec e(int j) const { return Vec::unit({1, j}); }

 private:
  Vec rho_apply(int j, const Vec& a) const;
  Vec tau_apply(int j, int k) const;
  std::vector<Rational> e_bracket(int j, int k) const;
  Vec project_base(const Vec& x) const;

  ExtensionSpec spec_;
};

/// E abelian of dimension m, rho = 0, tau = 0, form identity on E, and E
/// added to the toral part: a direct sum that keeps (T1)-(T6) but whose core
/// does not contain its centralizer.
std::shared_ptr<ExtensionAlgebra> direct_sum_with_abelian(AlgebraPtr a, int m);

/// Split classical algebra of the given type and rank tensored with
/// Q(sqrt p_1, ..., sqrt p_k), form (x a, y b) -> (x, y) f(a, b).
std::shared_ptr<ClassicalAlgebra> build_extension_example(const std::string& type, int rank,
                                                          const std::vector<std::uint64_t>& primes);

}  // namespace ealie
