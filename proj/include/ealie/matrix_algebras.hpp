#pragma once

// Concrete matrix Lie algebras behind the LieAlgebra interface:
//  - SkewTorusAlgebra: B = {X in gl_2l(A) : X* = -X} over the quantum torus,
//    or its derived algebra G = [B, B];
//  - ClassicalAlgebra: split so_{2l+1}, sp_{2l}, so_{2l} over Q, optionally
//    tensored with the square-root field Q(sqrt p_1, ..., sqrt p_k).

#include "ealie/algebra.hpp"
#include "ealie/matlie.hpp"

#include <map>
#include <mutex>

namespace ealie {

class SkewTorusAlgebra : public LieAlgebra {
 public:
  /// `derived` selects G = [B, B]. G_0^gamma is the span of [B_mu^rho,
  /// B_{-mu}^{gamma-rho}] over every weight mu and |rho|_inf <= margin.
  SkewTorusAlgebra(int ell, SignMatrix q, bool derived, int margin = 2);

  std::string label() const override;
  std::string root_type() const override { return "C"; }
  int root_rank() const override { return ell_; }
  int weight_dim() const override { return ell_; }
  int grading_rank() const override { return q_->nu(); }

  std::vector<Vec> homogeneous_basis(const Lattice& sigma) const override;
  Vec bracket(const Vec& x, const Vec& y) const override;
  Rational form(const Vec& x, const Vec& y) const override;
  ToralBasis toral() const override;
  Lattice degree_of_key(const Key& k) const override;
  std::string describe(const Vec& x) const override;

  int ell() const { return ell_; }
  bool derived() const { return derived_; }
  const SignPtr& signs() const { return q_; }
  /// B_mu^sigma computed as the kernel of X -> X + X* on monomials.
  std::vector<Vec> skew_piece(const std::vector<int>& weight, const Lattice& sigma) const;
  /// Weight-zero part of G at degree gamma (the derived span described above).
  std::vector<Vec> derived_zero_piece(const Lattice& gamma) const;
  Vec product(const Vec& x, const Vec& y) const;
  Vec star_vec(const Vec& x) const;

 private:
  std::vector<int> key_weight(int p, int r) const;

  int ell_;
  SignPtr q_;
  bool derived_;
  int margin_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<int>, Lattice>, std::vector<Vec>> skew_cache_;
  mutable std::map<Lattice, std::vector<Vec>> zero_cache_;
};

/// Split classical algebra of type B, C or D and rank l over Q(sqrt primes).
/// Keys are (p, r, a): the matrix unit e_{p,r} tensored with sqrt(a).
class ClassicalAlgebra : public LieAlgebra {
 public:
  ClassicalAlgebra(const std::string& type, int rank, std::vector<std::uint64_t> primes = {});

  std::string label() const override;
  std::string root_type() const override { return type_; }
  int root_rank() const override { return rank_; }
  int weight_dim() const override { return rank_; }
  int grading_rank() const override { return 0; }

  std::vector<Vec> homogeneous_basis(const Lattice& sigma) const override;
  Vec bracket(const Vec& x, const Vec& y) const override;
  Rational form(const Vec& x, const Vec& y) const override;
  ToralBasis toral() const override;
  Lattice degree_of_key(const Key&) const override { return {}; }
  std::string describe(const Vec& x) const override;

  int matrix_size() const { return n_; }
  /// Square-free products of the primes: the basis of the scalar field.
  const std::vector<std::uint64_t>& scalar_basis() const { return scalars_; }
  /// Matrix basis over Q (scalar index 1).
  const std::vector<Vec>& rational_basis() const { return basis_; }
  /// x tensor c, for x with scalar index 1.
  Vec tensor(const Vec& x, const SqrtFieldElement& c) const;

 private:
  std::string type_;
  int rank_;
  int n_;
  Rational scale_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> scalars_;
  std::vector<Vec> basis_;
};

}  // namespace ealie
