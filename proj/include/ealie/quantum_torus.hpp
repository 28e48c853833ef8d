#pragma once

// The quantum torus with sign matrix q: the twisted group algebra of Z^nu
// with generators t_i and relations t_i t_j = q_ij t_j t_i, q_ij = +-1.

#include "ealie/exact_arith.hpp"

#include <map>
#include <memory>
#include <ostream>
#include <vector>

namespace ealie {

using Lattice = std::vector<int>;

class SignMatrix {
 public:
  /// nu x nu with unit diagonal; `upper` lists q_12, q_13, ..., q_{nu-1,nu}
  /// row-major. Throws std::invalid_argument unless every entry is +-1 and
  /// the count is nu(nu-1)/2.
  SignMatrix(int nu, const std::vector<int>& upper);
  /// All q_ij = 1 (the commutative Laurent polynomial ring).
  static SignMatrix trivial(int nu);

  int nu() const { return nu_; }
  int at(int i, int j) const { return entries_[i * nu_ + j]; }
  std::vector<int> upper() const;

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.nu_ == b.nu_ && a.entries_ == b.entries_;
  }

 private:
  int nu_;
  std::vector<int> entries_;
};

/// kappa_sigma = prod_{i<j} q_ij^{n_i n_j}; sigma is even when this is +1.
int kappa(const Lattice& sigma, const SignMatrix& q);

struct Cocycles {
  int g;  // g_sigma^tau = prod_{i<j} q_ij^{n_i m_j}
  int f;  // g_sigma^tau * g_tau^sigma
};
Cocycles cocycles(const Lattice& sigma, const Lattice& tau, const SignMatrix& q);

/// The sign c with t^sigma t^tau = c t^{sigma+tau}, found by normal-ordering
/// the word t_1^{n_1}...t_nu^{n_nu} t_1^{m_1}...t_nu^{m_nu}.
int structure_constant(const Lattice& sigma, const Lattice& tau, const SignMatrix& q);

Lattice lattice_add(const Lattice& a, const Lattice& b);
Lattice lattice_neg(const Lattice& a);
Lattice lattice_sub(const Lattice& a, const Lattice& b);
bool lattice_is_zero(const Lattice& a);
int lattice_sup_norm(const Lattice& a);
/// All vectors of Z^nu with |sigma|_inf <= w, lexicographic order.
std::vector<Lattice> lattice_box(int nu, int w);

class TorusElement {
 public:
  using Terms = std::map<Lattice, GaussianRational>;

  explicit TorusElement(std::shared_ptr<const SignMatrix> q);
  static TorusElement monomial(std::shared_ptr<const SignMatrix> q, Lattice sigma,
                               GaussianRational c = GaussianRational(Rational(1)));

  const SignMatrix& signs() const { return *q_; }
  const std::shared_ptr<const SignMatrix>& sign_ptr() const { return q_; }
  const Terms& terms() const { return terms_; }
  GaussianRational coeff(const Lattice& sigma) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Lattice& sigma, const GaussianRational& c);
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement& operator*=(const GaussianRational& c);

  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(TorusElement a, const GaussianRational& c) { return a *= c; }
  /// Compares coefficients and sign matrices.
  friend bool operator==(const TorusElement& a, const TorusElement& b);
  friend std::ostream& operator<<(std::ostream& os, const TorusElement& x);

 private:
  std::shared_ptr<const SignMatrix> q_;
  Terms terms_;
};

/// Throws std::invalid_argument when the sign matrices differ.
TorusElement torus_mul(const TorusElement& a, const TorusElement& b);
/// x t^sigma -> conj(x) kappa_sigma t^sigma.
TorusElement torus_bar(const TorusElement& a);
/// Real part of the degree-0 coefficient of a*b.
Rational torus_form(const TorusElement& a, const TorusElement& b);

}  // namespace ealie
