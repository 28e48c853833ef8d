#include "ealie/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <sstream>

namespace ealie {

namespace {

// Eigenvalue of ad h on b, or nullopt when b is not an eigenvector.
std::optional<Rational> eigenvalue(const LieAlgebra& alg, const Vec& h, const Vec& b) {
  Vec hb = alg.bracket(h, b);
  const Key& lk = b.leading_key();
  Rational lambda = hb.coeff(lk) / b.coeff(lk);
  if (!(hb == b * lambda)) return std::nullopt;
  return lambda;
}

// Concatenates the brackets [z, g_i] into one vector with keys tagged by i.
Vec stacked_brackets(const LieAlgebra& alg, const Vec& z, const std::vector<Vec>& gens) {
  Vec out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Vec b = alg.bracket(z, gens[i]);
    for (const auto& [k, c] : b.terms()) {
      Key nk{static_cast<int>(i)};
      nk.insert(nk.end(), k.begin(), k.end());
      out.add_term(nk, c);
    }
  }
  return out;
}

std::vector<Vec> kernel_elements(const std::vector<Vec>& domain, const std::vector<Vec>& images) {
  std::vector<Vec> out;
  for (const auto& c : kernel_of_images(images)) out.push_back(combine(domain, c));
  return span_basis(out);
}

}  // namespace

RootSystemWindow::RootSystemWindow(AlgebraPtr algebra, int window)
    : algebra_(std::move(algebra)), window_(window), toral_(algebra_->toral()) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  std::size_t n = toral_.elements.size();
  gram_ = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_(i, j) = algebra_->form(toral_.elements[i], toral_.elements[j]);
  if (n == 0 || sgn(gram_.determinant()) != 0) {
    QMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n, Rational(0));
      e[j] = 1;
      auto col = gram_.solve(e);
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    gram_inverse_ = inv;
  }
  auto box = lattice_box(nu(), window_);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < box.size(); i = next++) degree_piece(box[i]);
  };
  std::size_t threads = std::min<std::size_t>(box.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t t = 1; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& j : jobs) j.get();
  for (const auto& sigma : box)
    for (const auto& [finite, basis] : degree_piece(sigma)) roots_.push_back(Root{finite, sigma});
  std::sort(roots_.begin(), roots_.end());
}

void RootSystemWindow::compute_degree(const Lattice& sigma) const {
  const LieAlgebra& alg = *algebra_;
  std::map<std::vector<int>, std::vector<Vec>> piece;
  std::vector<bool> is_slot(toral_.elements.size(), false);
  for (int s : toral_.finite_slots) is_slot[s] = true;
  for (int s : toral_.degree_slots) is_slot[s] = true;
  for (const auto& b : alg.homogeneous_basis(sigma)) {
    std::vector<Rational> vals;
    for (const auto& h : toral_.elements) {
      auto lambda = eigenvalue(alg, h, b);
      if (!lambda) {
        throw NonDiagonalAction("toral basis does not act diagonally on " + alg.describe(b));
      }
      vals.push_back(*lambda);
    }
    std::vector<int> finite;
    for (int s : toral_.finite_slots) {
      if (vals[s].get_den() != 1) throw NonDiagonalAction("non-integral weight on " + alg.describe(b));
      finite.push_back(static_cast<int>(vals[s].get_num().get_si()));
    }
    for (std::size_t i = 0; i < toral_.degree_slots.size(); ++i)
      if (vals[toral_.degree_slots[i]] != sigma[i]) {
        throw NonDiagonalAction("degree derivation disagrees with the grading on " + alg.describe(b));
      }
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (!is_slot[j] && sgn(vals[j]) != 0) {
        throw NonDiagonalAction("toral element outside the weight coordinates acts on " + alg.describe(b));
      }
    piece[finite].push_back(b);
  }
  std::lock_guard<std::mutex> lock(mu_);
  pieces_.try_emplace(sigma, std::move(piece));
}

const std::map<std::vector<int>, std::vector<Vec>>& RootSystemWindow::degree_piece(const Lattice& sigma) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pieces_.find(sigma);
    if (it != pieces_.end()) return it->second;
  }
  compute_degree(sigma);
  std::lock_guard<std::mutex> lock(mu_);
  return pieces_.at(sigma);
}

const std::vector<Vec>& RootSystemWindow::space(const Root& r) const {
  static const std::vector<Vec> kEmpty;
  const auto& piece = degree_piece(r.lattice);
  auto it = piece.find(r.finite);
  return it == piece.end() ? kEmpty : it->second;
}

RootSpace RootSystemWindow::root_space(const Root& r) const {
  RootSpace s{r, space(r), norm(r), false};
  s.isotropic = sgn(s.norm) == 0;
  return s;
}

std::vector<Root> RootSystemWindow::non_isotropic_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (sgn(norm(r)) != 0) out.push_back(r);
  return out;
}

std::vector<Root> RootSystemWindow::isotropic_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (sgn(norm(r)) == 0) out.push_back(r);
  return out;
}

std::vector<Rational> RootSystemWindow::functional(const Root& r) const {
  std::vector<Rational> f(toral_.elements.size(), Rational(0));
  for (std::size_t k = 0; k < toral_.finite_slots.size(); ++k) f[toral_.finite_slots[k]] = r.finite[k];
  for (std::size_t i = 0; i < toral_.degree_slots.size(); ++i) f[toral_.degree_slots[i]] = r.lattice[i];
  return f;
}

Rational RootSystemWindow::inner(const Root& a, const Root& b) const {
  if (!gram_inverse_) throw std::domain_error("form is degenerate on the toral basis");
  auto fa = functional(a), fb = functional(b);
  Rational s(0);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (sgn(fa[i]) == 0) continue;
    for (std::size_t j = 0; j < fb.size(); ++j)
      if (sgn(fb[j]) != 0) s += fa[i] * (*gram_inverse_)(i, j) * fb[j];
  }
  return s;
}

QMatrix RootSystemWindow::finite_form() const {
  int l = ell();
  QMatrix m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Root a{std::vector<int>(l, 0), Lattice(nu(), 0)}, b = a;
      a.finite[i] = 1;
      b.finite[j] = 1;
      m(i, j) = inner(a, b);
    }
  return m;
}

std::shared_ptr<RootSystemWindow> decompose_window(AlgebraPtr algebra, int window) {
  return std::make_shared<RootSystemWindow>(std::move(algebra), window);
}

Vec rep_t_alpha(const RootSystemWindow& win, const Root& alpha) {
  if (!win.gram_nonsingular()) throw std::domain_error("form is degenerate on the toral basis");
  auto f = win.functional(alpha);
  auto c = win.toral_gram().solve(f);
  return combine(win.toral().elements, *c);
}

std::optional<Sl2Triple> sl2_search(const RootSystemWindow& win, const Vec& x, const Root& alpha) {
  const LieAlgebra& alg = win.algebra();
  Rational n = win.norm(alpha);
  if (sgn(n) == 0) throw std::invalid_argument("sl2 search needs a non-isotropic root");
  Vec t = rep_t_alpha(win, alpha);
  const auto& partners = win.space(-alpha);
  std::vector<Vec> images;
  for (const auto& b : partners) images.push_back(alg.bracket(x, b));
  auto c = solve_combination(images, t);
  if (!c) return std::nullopt;
  Sl2Triple out;
  out.e = x;
  out.y = combine(partners, *c);
  out.h = t * (Rational(2) / n);
  out.f = out.y * (Rational(2) / n);
  out.xy_form = alg.form(x, out.y);
  return out;
}

bool is_sl2_triple(const LieAlgebra& alg, const Sl2Triple& t) {
  return alg.bracket(t.h, t.e) == t.e * Rational(2) && alg.bracket(t.h, t.f) == t.f * Rational(-2) &&
         alg.bracket(t.e, t.f) == t.h;
}

std::optional<std::pair<Vec, Vec>> isotropic_pair_search(const RootSystemWindow& win, const Root& delta) {
  const LieAlgebra& alg = win.algebra();
  Vec t = rep_t_alpha(win, delta);
  if (t.is_zero()) return std::make_pair(Vec(), Vec());
  const auto& partners = win.space(-delta);
  for (const auto& x : win.space(delta)) {
    std::vector<Vec> images;
    for (const auto& b : partners) images.push_back(alg.bracket(x, b));
    auto c = solve_combination(images, t);
    if (c) return std::make_pair(x, combine(partners, *c));
  }
  return std::nullopt;
}

Vec exp_ad(const LieAlgebra& alg, const Vec& z, const Vec& v, const Rational& scale, int max_power) {
  Vec out = v, term = v;
  for (int n = 1;; ++n) {
    term = alg.bracket(z, term) * (scale / n);
    if (term.is_zero()) return out;
    if (n > max_power) throw std::runtime_error("ad is not nilpotent within the power bound");
    out += term;
  }
}

Vec theta_automorphism(const RootSystemWindow& win, const Root& alpha, const Rational& t, const Vec& target) {
  if (sgn(t) == 0) throw std::invalid_argument("theta needs a nonzero scalar");
  const auto& sp = win.space(alpha);
  if (sp.empty()) throw std::invalid_argument("not a root");
  auto triple = sl2_search(win, sp.front(), alpha);
  if (!triple) throw std::runtime_error("no sl2 partner for the root vector");
  const LieAlgebra& alg = win.algebra();
  Vec v = exp_ad(alg, triple->e, target, t);
  v = exp_ad(alg, triple->f, v, -1 / t);
  return exp_ad(alg, triple->e, v, t);
}

CoreCenter core_and_center_window(const RootSystemWindow& win, int margin) {
  const LieAlgebra& alg = win.algebra();
  CoreCenter out;
  std::vector<Vec> gens;
  for (const auto& r : win.non_isotropic_roots())
    for (const auto& b : win.space(r)) gens.push_back(b);

  for (const auto& sigma : lattice_box(win.nu(), win.window())) {
    Echelon span;
    for (const auto& [finite, basis] : win.degree_piece(sigma)) {
      if (sgn(win.norm(Root{finite, sigma})) == 0) continue;
      for (const auto& b : basis) span.insert(b);
    }
    for (const auto& rho : lattice_box(win.nu(), win.window() + margin)) {
      Lattice rest = lattice_sub(sigma, rho);
      if (lattice_sup_norm(rest) > win.window() + margin) continue;
      for (const auto& [finite, left] : win.degree_piece(rho)) {
        Root a{finite, rho};
        if (sgn(win.norm(a)) == 0) continue;
        Root b = -a;
        b.lattice = rest;
        for (const auto& x : left)
          for (const auto& y : win.space(b)) span.insert(alg.bracket(x, y));
      }
    }
    out.core[sigma] = span.basis();
  }

  Echelon center;
  for (const auto& [sigma, basis] : out.core) {
    std::vector<Vec> images;
    for (const auto& z : basis) images.push_back(stacked_brackets(alg, z, gens));
    for (const auto& z : kernel_elements(basis, images)) center.insert(z);
  }
  out.center = center.basis();

  Echelon total;
  Root zero{std::vector<int>(win.ell(), 0), Lattice(win.nu(), 0)};
  for (const auto& a : win.non_isotropic_roots()) {
    Vec t = rep_t_alpha(win, a);
    Echelon ha;
    for (const auto& x : win.space(a))
      for (const auto& y : win.space(-a)) {
        Vec h = alg.bracket(x, y);
        h.axpy(-alg.form(x, y), t);
        ha.insert(h);
        total.insert(h);
      }
    out.h_alpha[a] = ha.basis();
  }
  out.h_alpha_sum = total.basis();
  const auto& l0 = win.space(zero);
  std::vector<Vec> images;
  for (const auto& x : l0) {
    Vec img;
    for (std::size_t j = 0; j < win.toral().elements.size(); ++j)
      img.add_term({static_cast<int>(j)}, alg.form(x, win.toral().elements[j]));
    images.push_back(img);
  }
  out.h_perp = kernel_elements(l0, images);
  out.h_alpha_sum_is_h_perp = same_span(out.h_alpha_sum, out.h_perp);
  return out;
}

std::vector<Vec> window_centralizer_of_core(const RootSystemWindow& win, const Lattice& sigma) {
  const LieAlgebra& alg = win.algebra();
  std::vector<Vec> gens;
  for (const auto& r : win.non_isotropic_roots())
    for (const auto& b : win.space(r)) gens.push_back(b);
  std::vector<Vec> domain;
  for (const auto& [finite, basis] : win.degree_piece(sigma))
    domain.insert(domain.end(), basis.begin(), basis.end());
  std::vector<Vec> images;
  for (const auto& z : domain) images.push_back(stacked_brackets(alg, z, gens));
  return kernel_elements(domain, images);
}

}  // namespace ealie
