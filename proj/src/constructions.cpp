#include "ealie/constructions.hpp"

#include <sstream>

namespace ealie {

namespace {

Vec prefixed(int tag, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v.terms()) {
    Key nk{tag};
    nk.insert(nk.end(), k.begin(), k.end());
    out.add_term(nk, c);
  }
  return out;
}

Vec unprefixed(int tag, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v.terms())
    if (k[0] == tag) out.add_term(Key(k.begin() + 1, k.end()), c);
  return out;
}

std::string lattice_string(const Lattice& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

}  // namespace

AffinizedAlgebra::AffinizedAlgebra(AlgebraPtr g) : g_(std::move(g)), nu_(g_->grading_rank()) {
  if (!g_->toral().degree_slots.empty()) {
    throw std::invalid_argument("affinization expects an externally graded algebra");
  }
}

std::string AffinizedAlgebra::label() const { return "aff(" + g_->label() + ")"; }

Vec AffinizedAlgebra::lift(const Vec& g) const { return prefixed(0, g); }
Vec AffinizedAlgebra::project(const Vec& x) const { return unprefixed(0, x); }

Vec AffinizedAlgebra::apply_degree(int i, const Vec& g) const {
  Vec out;
  for (const auto& [k, c] : g.terms()) {
    int n = g_->degree_of_key(k)[i];
    if (n != 0) out.add_term(k, c * n);
  }
  return out;
}

std::vector<Vec> AffinizedAlgebra::homogeneous_basis(const Lattice& sigma) const {
  std::vector<Vec> out;
  for (const auto& b : g_->homogeneous_basis(sigma)) out.push_back(lift(b));
  if (lattice_is_zero(sigma)) {
    for (int i = 0; i < nu_; ++i) out.push_back(central(i));
    for (int i = 0; i < nu_; ++i) out.push_back(derivation(i));
  }
  return out;
}

Vec AffinizedAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec xg = project(x), yg = project(y);
  Vec out = lift(g_->bracket(xg, yg));
  for (int i = 0; i < nu_; ++i) {
    if (!xg.is_zero() && !yg.is_zero()) out.add_term({1, i}, g_->form(apply_degree(i, xg), yg));
    Rational xd = x.coeff({2, i}), yd = y.coeff({2, i});
    if (sgn(xd) != 0) out.axpy(xd, lift(apply_degree(i, yg)));
    if (sgn(yd) != 0) out.axpy(-yd, lift(apply_degree(i, xg)));
  }
  return out;
}

Rational AffinizedAlgebra::form(const Vec& x, const Vec& y) const {
  Rational out = g_->form(project(x), project(y));
  for (int i = 0; i < nu_; ++i)
    out += x.coeff({1, i}) * y.coeff({2, i}) + x.coeff({2, i}) * y.coeff({1, i});
  return out;
}

ToralBasis AffinizedAlgebra::toral() const {
  ToralBasis base = g_->toral();
  ToralBasis h;
  for (const auto& e : base.elements) h.elements.push_back(lift(e));
  h.finite_slots = base.finite_slots;
  for (int i = 0; i < nu_; ++i) h.elements.push_back(central(i));
  for (int i = 0; i < nu_; ++i) {
    h.degree_slots.push_back(static_cast<int>(h.elements.size()));
    h.elements.push_back(derivation(i));
  }
  return h;
}

Lattice AffinizedAlgebra::degree_of_key(const Key& k) const {
  if (k[0] == 0) return g_->degree_of_key(Key(k.begin() + 1, k.end()));
  return Lattice(nu_, 0);
}

std::string AffinizedAlgebra::describe(const Vec& x) const {
  std::ostringstream os;
  Vec g = project(x);
  os << (g.is_zero() ? std::string("0") : g_->describe(g));
  for (int i = 0; i < nu_; ++i) {
    if (sgn(x.coeff({1, i})) != 0) os << " + " << x.coeff({1, i}) << "*c" << i + 1;
    if (sgn(x.coeff({2, i})) != 0) os << " + " << x.coeff({2, i}) << "*d" << i + 1;
  }
  return os.str();
}

std::shared_ptr<AffinizedAlgebra> affinize(AlgebraPtr g, int probe) {
  int nu = g->grading_rank();
  auto box = lattice_box(nu, probe);
  std::vector<std::vector<Vec>> pieces;
  for (const auto& s : box) pieces.push_back(g->homogeneous_basis(s));
  for (std::size_t a = 0; a < box.size(); ++a)
    for (std::size_t b = 0; b < box.size(); ++b) {
      Lattice sum = lattice_add(box[a], box[b]);
      for (const auto& x : pieces[a])
        for (const auto& y : pieces[b]) {
          if (!lattice_is_zero(sum) && sgn(g->form(x, y)) != 0) {
            throw GradingViolation("form pairs degrees " + lattice_string(box[a]) + " and " +
                                   lattice_string(box[b]));
          }
          Vec z = g->bracket(x, y);
          if (!z.is_zero() && g->degree_of(z) != sum) {
            throw GradingViolation("bracket of degrees " + lattice_string(box[a]) + " and " +
                                   lattice_string(box[b]) + " leaves degree " + lattice_string(sum));
          }
        }
    }
  return std::make_shared<AffinizedAlgebra>(std::move(g));
}

// ---------------------------------------------------------------------------

ExtensionAlgebra::ExtensionAlgebra(ExtensionSpec spec) : spec_(std::move(spec)) {
  const int m = spec_.e_dim;
  if (!spec_.base) throw std::invalid_argument("extension needs a base algebra");
  if (static_cast<int>(spec_.e_form.rows()) != m || static_cast<int>(spec_.e_form.cols()) != m) {
    throw std::invalid_argument("form on E must be " + std::to_string(m) + " x " + std::to_string(m));
  }
  const LieAlgebra& a = *spec_.base;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      if (!(tau_apply(j, k) + tau_apply(k, j)).is_zero()) {
        throw ExtensionViolation("tau is not antisymmetric", {j, k});
      }
  std::vector<Vec> probes;
  for (const auto& s : lattice_box(a.grading_rank(), spec_.probe))
    for (const auto& b : a.homogeneous_basis(s)) probes.push_back(b);
  std::vector<Vec> zero_piece = a.homogeneous_basis(Lattice(a.grading_rank(), 0));
  for (int j = 0; j < m; ++j)
    for (const auto& x : zero_piece)
      for (const auto& y : probes) {
        Vec lhs = rho_apply(j, a.bracket(x, y));
        Vec rhs = a.bracket(rho_apply(j, x), y) + a.bracket(x, rho_apply(j, y));
        if (!(lhs == rhs)) throw ExtensionViolation("rho(e_j) is not a derivation", {j});
      }
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      auto jk = e_bracket(j, k);
      for (const auto& x : probes) {
        Vec lhs = a.bracket(tau_apply(j, k), x);
        Vec rhs = rho_apply(j, rho_apply(k, x)) - rho_apply(k, rho_apply(j, x));
        for (int l = 0; l < m; ++l)
          if (sgn(jk[l]) != 0) rhs.axpy(-jk[l], rho_apply(l, x));
        if (!(lhs == rhs)) {
          throw ExtensionViolation("ad tau(e_j, e_k) differs from [rho e_j, rho e_k] - rho [e_j, e_k]", {j, k});
        }
      }
    }
  // Jacobi on E-triples: the E-part is the Jacobi identity of E, the A-part
  // is the cyclic cocycle identity.
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        Vec x = e(j), y = e(k), z = e(l);
        Vec jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        if (!jac.is_zero()) throw ExtensionViolation("cocycle identity fails", {j, k, l});
      }
}

std::string ExtensionAlgebra::label() const {
  return spec_.base->label() + " + E(dim " + std::to_string(spec_.e_dim) + ")";
}

Vec ExtensionAlgebra::lift(const Vec& a) const { return prefixed(0, a); }
Vec ExtensionAlgebra::project_base(const Vec& x) const { return unprefixed(0, x); }

Vec ExtensionAlgebra::rho_apply(int j, const Vec& a) const {
  if (!spec_.rho || a.is_zero()) return {};
  return spec_.rho(j, a);
}

Vec ExtensionAlgebra::tau_apply(int j, int k) const {
  if (!spec_.tau) return {};
  return spec_.tau(j, k);
}

std::vector<Rational> ExtensionAlgebra::e_bracket(int j, int k) const {
  if (!spec_.e_bracket) return std::vector<Rational>(spec_.e_dim, Rational(0));
  return spec_.e_bracket(j, k);
}

std::vector<Vec> ExtensionAlgebra::homogeneous_basis(const Lattice& sigma) const {
  std::vector<Vec> out;
  for (const auto& b : spec_.base->homogeneous_basis(sigma)) out.push_back(lift(b));
  if (lattice_is_zero(sigma))
    for (int j = 0; j < spec_.e_dim; ++j) out.push_back(e(j));
  return out;
}

Vec ExtensionAlgebra::bracket(const Vec& x, const Vec& y) const {
  const LieAlgebra& a = *spec_.base;
  Vec xa = project_base(x), ya = project_base(y);
  Vec out = lift(a.bracket(xa, ya));
  for (int j = 0; j < spec_.e_dim; ++j) {
    Rational xj = x.coeff({1, j}), yj = y.coeff({1, j});
    if (sgn(xj) != 0) out.axpy(xj, lift(rho_apply(j, ya)));
    if (sgn(yj) != 0) out.axpy(-yj, lift(rho_apply(j, xa)));
    if (sgn(xj) == 0) continue;
    for (int k = 0; k < spec_.e_dim; ++k) {
      Rational yk = y.coeff({1, k});
      if (sgn(yk) == 0) continue;
      auto br = e_bracket(j, k);
      for (int l = 0; l < spec_.e_dim; ++l) out.add_term({1, l}, xj * yk * br[l]);
      out.axpy(xj * yk, lift(tau_apply(j, k)));
    }
  }
  return out;
}

Rational ExtensionAlgebra::form(const Vec& x, const Vec& y) const {
  Rational out = spec_.base->form(project_base(x), project_base(y));
  for (int j = 0; j < spec_.e_dim; ++j)
    for (int k = 0; k < spec_.e_dim; ++k) out += x.coeff({1, j}) * y.coeff({1, k}) * spec_.e_form(j, k);
  return out;
}

ToralBasis ExtensionAlgebra::toral() const {
  ToralBasis base = spec_.base->toral();
  ToralBasis h;
  for (const auto& v : base.elements) h.elements.push_back(lift(v));
  h.finite_slots = base.finite_slots;
  h.degree_slots = base.degree_slots;
  for (int j : spec_.e_toral) h.elements.push_back(e(j));
  return h;
}

Lattice ExtensionAlgebra::degree_of_key(const Key& k) const {
  if (k[0] == 0) return spec_.base->degree_of_key(Key(k.begin() + 1, k.end()));
  return Lattice(spec_.base->grading_rank(), 0);
}

std::string ExtensionAlgebra::describe(const Vec& x) const {
  std::ostringstream os;
  Vec a = project_base(x);
  os << (a.is_zero() ? std::string("0") : spec_.base->describe(a));
  for (int j = 0; j < spec_.e_dim; ++j)
    if (sgn(x.coeff({1, j})) != 0) os << " + " << x.coeff({1, j}) << "*w" << j + 1;
  return os.str();
}

std::shared_ptr<ExtensionAlgebra> direct_sum_with_abelian(AlgebraPtr a, int m) {
  ExtensionSpec spec;
  spec.base = std::move(a);
  spec.e_dim = m;
  spec.e_form = QMatrix::identity(m);
  for (int j = 0; j < m; ++j) spec.e_toral.push_back(j);
  return std::make_shared<ExtensionAlgebra>(std::move(spec));
}

std::shared_ptr<ClassicalAlgebra> build_extension_example(const std::string& type, int rank,
                                                          const std::vector<std::uint64_t>& primes) {
  return std::make_shared<ClassicalAlgebra>(type, rank, primes);
}

}  // namespace ealie
