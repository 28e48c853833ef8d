#pragma once

// Finite root systems with 0 as a member. Classical types and G2 use
// epsilon-coordinates; E6-E8 and F4 use simple-root coordinates with the
// symmetrized Cartan form. The form is scaled so that short roots have norm 1.

#include "ealie/linalg.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ealie {

using Weight = std::vector<int>;

enum class RootType { A, B, C, D, E, F, G, BC };

RootType parse_root_type(const std::string& s);
std::string to_string(RootType t);

class FiniteRootSystem {
 public:
  FiniteRootSystem(std::string label, QMatrix form, std::set<Weight> roots,
                   std::vector<Weight> simple = {});

  const std::string& label() const { return label_; }
  std::size_t ambient_dim() const { return form_.rows(); }
  const QMatrix& form() const { return form_; }
  const std::set<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }

  bool contains(const Weight& w) const { return roots_.count(w) > 0; }
  Rational inner(const Weight& a, const Weight& b) const;
  Rational norm(const Weight& a) const { return inner(a, a); }

  std::vector<Weight> nonzero_roots() const;
  std::vector<Weight> short_roots() const;
  std::vector<Weight> long_roots() const;
  /// alpha with alpha/2 a nonzero root; empty for reduced systems.
  std::vector<Weight> extra_long_roots() const;
  FiniteRootSystem reduced() const;
  bool is_reduced() const { return extra_long_roots().empty(); }

  /// A_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j) over the simple roots.
  std::vector<std::vector<int>> cartan_matrix() const;

 private:
  std::string label_;
  QMatrix form_;
  std::set<Weight> roots_;
  std::vector<Weight> simple_;
};

/// Throws std::invalid_argument for an invalid type/rank pair.
FiniteRootSystem build_finite_root_system(RootType type, int rank);

Rational form_inner(const QMatrix& form, const Weight& a, const Weight& b);

/// w_alpha(beta) = beta - 2(beta,alpha)/(alpha,alpha) alpha. Throws
/// std::invalid_argument for isotropic alpha and std::domain_error when the
/// result leaves the integer lattice.
Weight reflect(const Weight& alpha, const Weight& beta, const QMatrix& form);

struct RootString {
  int d = 0;
  int u = 0;
  Rational cartan;  // 2(beta,alpha)/(alpha,alpha)
  bool ok = true;   // unbroken, d - u = cartan, |cartan| <= 4
  std::string problem;
};

/// Scans beta + n alpha for |n| <= range against `member`.
RootString root_string(const Weight& beta, const Weight& alpha, const QMatrix& form,
                       const std::function<bool(const Weight&)>& member, int range = 6);

/// Closure under negation and reflections, integral Cartan numbers, 0 present.
bool is_finite_root_system(const std::set<Weight>& roots, const QMatrix& form, std::string* why = nullptr);

}  // namespace ealie
