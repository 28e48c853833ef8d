#include "ealie/quantum_torus.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ealie {

SignMatrix::SignMatrix(int nu, const std::vector<int>& upper) : nu_(nu), entries_(nu * nu, 1) {
  if (nu < 0) throw std::invalid_argument("nu must be non-negative");
  if (static_cast<int>(upper.size()) != nu * (nu - 1) / 2) {
    throw std::invalid_argument("expected " + std::to_string(nu * (nu - 1) / 2) +
                                " q entries for nu = " + std::to_string(nu));
  }
  std::size_t k = 0;
  for (int i = 0; i < nu; ++i) {
    for (int j = i + 1; j < nu; ++j) {
      int v = upper[k++];
      if (v != 1 && v != -1) throw std::invalid_argument("q entries must be ±1");
      entries_[i * nu + j] = v;
      entries_[j * nu + i] = v;
    }
  }
}

SignMatrix SignMatrix::trivial(int nu) {
  return SignMatrix(nu, std::vector<int>(nu * (nu - 1) / 2, 1));
}

std::vector<int> SignMatrix::upper() const {
  std::vector<int> out;
  for (int i = 0; i < nu_; ++i)
    for (int j = i + 1; j < nu_; ++j) out.push_back(at(i, j));
  return out;
}

namespace {

void check_dim(const Lattice& v, const SignMatrix& q) {
  if (static_cast<int>(v.size()) != q.nu()) {
    throw std::invalid_argument("lattice vector of length " + std::to_string(v.size()) +
                                " for nu = " + std::to_string(q.nu()));
  }
}

// Sign of prod_{i<j} q_ij^{a_i b_j}.
int twisted_product(const Lattice& a, const Lattice& b, const SignMatrix& q) {
  long long odd = 0;
  for (int i = 0; i < q.nu(); ++i)
    for (int j = i + 1; j < q.nu(); ++j)
      if (q.at(i, j) == -1) odd += static_cast<long long>(a[i]) * b[j];
  return (odd % 2 == 0) ? 1 : -1;
}

}  // namespace

int kappa(const Lattice& sigma, const SignMatrix& q) {
  check_dim(sigma, q);
  return twisted_product(sigma, sigma, q);
}

Cocycles cocycles(const Lattice& sigma, const Lattice& tau, const SignMatrix& q) {
  check_dim(sigma, q);
  check_dim(tau, q);
  int g = twisted_product(sigma, tau, q);
  return {g, g * twisted_product(tau, sigma, q)};
}

int structure_constant(const Lattice& sigma, const Lattice& tau, const SignMatrix& q) {
  check_dim(sigma, q);
  check_dim(tau, q);
  // Blocks (generator, exponent). Adjacent blocks t_j^a t_i^b with i < j are
  // swapped at the cost of q_ij^{ab}; q_ij = +-1 makes this valid for negative
  // exponents too.
  std::vector<std::pair<int, int>> word;
  for (int i = 0; i < q.nu(); ++i)
    if (sigma[i] != 0) word.emplace_back(i, sigma[i]);
  for (int i = 0; i < q.nu(); ++i)
    if (tau[i] != 0) word.emplace_back(i, tau[i]);
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      auto [j, a] = word[k];
      auto [i, b] = word[k + 1];
      if (i < j) {
        if (q.at(i, j) == -1 && (static_cast<long long>(a) * b) % 2 != 0) sign = -sign;
        std::swap(word[k], word[k + 1]);
      }
    }
  }
  return sign;
}

Lattice lattice_add(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice length mismatch");
  Lattice c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Lattice lattice_neg(const Lattice& a) {
  Lattice c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Lattice lattice_sub(const Lattice& a, const Lattice& b) { return lattice_add(a, lattice_neg(b)); }

bool lattice_is_zero(const Lattice& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int lattice_sup_norm(const Lattice& a) {
  int m = 0;
  for (int x : a) m = std::max(m, std::abs(x));
  return m;
}

std::vector<Lattice> lattice_box(int nu, int w) {
  std::vector<Lattice> out;
  Lattice cur(nu, -w);
  if (nu == 0) return {Lattice{}};
  for (;;) {
    out.push_back(cur);
    int k = nu - 1;
    while (k >= 0 && cur[k] == w) cur[k--] = -w;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

TorusElement::TorusElement(std::shared_ptr<const SignMatrix> q) : q_(std::move(q)) {
  if (!q_) throw std::invalid_argument("torus element needs a sign matrix");
}

TorusElement TorusElement::monomial(std::shared_ptr<const SignMatrix> q, Lattice sigma,
                                    GaussianRational c) {
  TorusElement t(std::move(q));
  check_dim(sigma, *t.q_);
  t.add_term(sigma, c);
  return t;
}

GaussianRational TorusElement::coeff(const Lattice& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void TorusElement::add_term(const Lattice& sigma, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (!(*q_ == *o.q_)) throw std::invalid_argument("mismatched sign matrices");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (!(*q_ == *o.q_)) throw std::invalid_argument("mismatched sign matrices");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

TorusElement& TorusElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return *a.q_ == *b.q_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const TorusElement& x) {
  if (x.terms_.empty()) return os << '0';
  bool first = true;
  for (const auto& [s, c] : x.terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")t^(";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ')';
  }
  return os;
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b) {
  if (!(a.signs() == b.signs())) throw std::invalid_argument("mismatched sign matrices");
  TorusElement out(a.sign_ptr());
  for (const auto& [s, x] : a.terms()) {
    for (const auto& [t, y] : b.terms()) {
      GaussianRational c = x * y;
      if (structure_constant(s, t, a.signs()) < 0) c = -c;
      out.add_term(lattice_add(s, t), c);
    }
  }
  return out;
}

TorusElement torus_bar(const TorusElement& a) {
  TorusElement out(a.sign_ptr());
  for (const auto& [s, x] : a.terms()) {
    GaussianRational c = x.conj();
    if (kappa(s, a.signs()) < 0) c = -c;
    out.add_term(s, c);
  }
  return out;
}

Rational torus_form(const TorusElement& a, const TorusElement& b) {
  return torus_mul(a, b).coeff(Lattice(a.signs().nu(), 0)).re();
}

}  // namespace ealie
