#pragma once

// Root-space decomposition of a graded algebra relative to its toral basis,
// restricted to lattice degrees |sigma|_inf <= w. Root spaces outside the
// window are computed on demand, so brackets can use a margin.

#include "ealie/algebra.hpp"
#include "ealie/root.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace ealie {

struct NonDiagonalAction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootSpace {
  Root root;
  std::vector<Vec> basis;
  Rational norm;
  bool isotropic = false;
  std::size_t dim() const { return basis.size(); }
};

class RootSystemWindow {
 public:
  RootSystemWindow(AlgebraPtr algebra, int window);

  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  int window() const { return window_; }
  int nu() const { return algebra_->grading_rank(); }
  int ell() const { return algebra_->weight_dim(); }
  const ToralBasis& toral() const { return toral_; }
  const QMatrix& toral_gram() const { return gram_; }
  bool gram_nonsingular() const { return gram_inverse_.has_value(); }

  /// Roots with nonzero space and |lattice|_inf <= window, sorted.
  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> non_isotropic_roots() const;
  std::vector<Root> isotropic_roots() const;
  bool in_window(const Root& r) const { return lattice_sup_norm(r.lattice) <= window_; }
  /// Whether r is a root; decided exactly for any lattice degree.
  bool is_root(const Root& r) const { return !space(r).empty(); }

  /// Root space basis at any degree (computed and cached on demand).
  const std::vector<Vec>& space(const Root& r) const;
  /// All root spaces at lattice degree sigma keyed by finite weight.
  const std::map<std::vector<int>, std::vector<Vec>>& degree_piece(const Lattice& sigma) const;
  RootSpace root_space(const Root& r) const;

  /// alpha(h_j) for every toral element.
  std::vector<Rational> functional(const Root& r) const;
  /// (alpha, beta) = functional(alpha)^T Gram^{-1} functional(beta).
  Rational inner(const Root& a, const Root& b) const;
  Rational norm(const Root& a) const { return inner(a, a); }
  /// Form on the finite epsilon-coordinates (l x l).
  QMatrix finite_form() const;

 private:
  void compute_degree(const Lattice& sigma) const;

  AlgebraPtr algebra_;
  int window_;
  ToralBasis toral_;
  QMatrix gram_;
  std::optional<QMatrix> gram_inverse_;
  std::vector<Root> roots_;
  mutable std::mutex mu_;
  mutable std::map<Lattice, std::map<std::vector<int>, std::vector<Vec>>> pieces_;
};

/// Throws NonDiagonalAction naming the first basis element that is not a
/// simultaneous eigenvector.
std::shared_ptr<RootSystemWindow> decompose_window(AlgebraPtr algebra, int window);

/// t_alpha = sum c_j h_j with (t_alpha, h) = alpha(h). Throws std::domain_error
/// for a degenerate Gram matrix on the toral basis.
Vec rep_t_alpha(const RootSystemWindow& win, const Root& alpha);

struct Sl2Triple {
  Vec e;  // the given x
  Vec y;  // [x, y] = t_alpha
  Vec h;  // 2 t_alpha / (alpha, alpha)
  Vec f;  // 2 y / (alpha, alpha)
  Rational xy_form;  // (x, y), equal to 1 by invariance
};

/// Solves [x, y] = t_alpha for y in L_{-alpha}; nullopt when unsolvable.
std::optional<Sl2Triple> sl2_search(const RootSystemWindow& win, const Vec& x, const Root& alpha);

/// True when [h, e] = 2e, [h, f] = -2f, [e, f] = h.
bool is_sl2_triple(const LieAlgebra& alg, const Sl2Triple& t);

/// For isotropic delta: basis pairs x in L_delta, y in L_{-delta} with
/// [x, y] = t_delta (after scaling).
std::optional<std::pair<Vec, Vec>> isotropic_pair_search(const RootSystemWindow& win, const Root& delta);

/// exp(ad z)(v) as a finite sum; throws std::runtime_error if (ad z)^n v does
/// not vanish for n <= max_power.
Vec exp_ad(const LieAlgebra& alg, const Vec& z, const Vec& v, const Rational& scale = Rational(1),
           int max_power = 24);

/// theta_alpha(t) = exp(ad t e) exp(ad -t^{-1} f) exp(ad t e) for the
/// sl2-triple built from the first basis element of L_alpha.
Vec theta_automorphism(const RootSystemWindow& win, const Root& alpha, const Rational& t, const Vec& target);

struct CoreCenter {
  /// Core pieces per lattice degree in the window.
  std::map<Lattice, std::vector<Vec>> core;
  /// Elements of the core (window degrees) commuting with every core
  /// generator in the window.
  std::vector<Vec> center;
  std::map<Root, std::vector<Vec>> h_alpha;
  std::vector<Vec> h_alpha_sum;
  /// {x in L_0 : (x, H) = 0}.
  std::vector<Vec> h_perp;
  bool h_alpha_sum_is_h_perp = false;
};

/// Core via sums of non-isotropic root spaces and brackets [L_a, L_{-a+sigma}]
/// with the second factor's degree within window + margin.
CoreCenter core_and_center_window(const RootSystemWindow& win, int margin = 2);

/// Elements of L^sigma commuting with all non-isotropic root vectors in the window.
std::vector<Vec> window_centralizer_of_core(const RootSystemWindow& win, const Lattice& sigma);

}  // namespace ealie
