#pragma once

// 2l x 2l matrices over the quantum torus, the involution
// X* = E^{-1} bar(X)^t E with E = [[0, I], [-I, 0]], the skew elements
// B = {X : X* = -X}, and explicit bases of the graded pieces of G = [B, B].
//
// Matrix indices in the public API are 1-based, as in e_{r,s}.

#include "ealie/linalg.hpp"
#include "ealie/quantum_torus.hpp"
#include "ealie/root.hpp"

#include <memory>
#include <ostream>
#include <vector>

namespace ealie {

using SignPtr = std::shared_ptr<const SignMatrix>;

class LieElement {
 public:
  LieElement(int ell, SignPtr q);
  /// c * t^sigma * e_{p,r}
  static LieElement unit(int ell, SignPtr q, int p, int r, const Lattice& sigma,
                         GaussianRational c = GaussianRational(Rational(1)));

  int ell() const { return ell_; }
  int size() const { return 2 * ell_; }
  const SignPtr& signs() const { return q_; }
  TorusElement& at(int p, int r) { return entries_[(p - 1) * size() + (r - 1)]; }
  const TorusElement& at(int p, int r) const { return entries_[(p - 1) * size() + (r - 1)]; }
  bool is_zero() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const GaussianRational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const GaussianRational& c) { return a *= c; }
  friend LieElement operator*(const GaussianRational& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b);
  friend std::ostream& operator<<(std::ostream& os, const LieElement& x);

 private:
  int ell_;
  SignPtr q_;
  std::vector<TorusElement> entries_;
};

/// hdot_r = e_{r,r} - e_{l+r,l+r} and hddot_r = e_{r,r} + e_{l+r,l+r}, times t^sigma.
LieElement hdot(int ell, SignPtr q, int r, const Lattice& sigma);
LieElement hddot(int ell, SignPtr q, int r, const Lattice& sigma);

LieElement mat_mul(const LieElement& x, const LieElement& y);
/// XY - YX. Throws std::invalid_argument on shape or sign-matrix mismatch.
LieElement mat_bracket(const LieElement& x, const LieElement& y);
LieElement star(const LieElement& x);
/// eps(tr(XY)).
Rational trace_form(const LieElement& x, const LieElement& y);

/// Coordinates over Q: key (p-1, r-1, part, sigma...), part 0 for the real and
/// 1 for the imaginary coefficient.
Vec to_vec(const LieElement& x);
LieElement from_vec(int ell, SignPtr q, const Vec& v);

struct GradedPiece {
  Root root;
  std::vector<LieElement> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Explicit basis of G^sigma_{alpha} for alpha = root.finite a root of C_l
/// (0 included; for 0 the closed-form case table is used).
/// Throws std::invalid_argument if root.finite is not in C_l.
GradedPiece skew_root_basis(int ell, SignPtr q, const Root& root);

/// Whether gamma = sigma + tau with kappa_sigma kappa_tau = +1 (even property)
/// or -1 (odd property) for some sigma, tau.
struct ParityProperties {
  bool even;
  bool odd;
};
ParityProperties parity_properties(const Lattice& gamma, const SignMatrix& q);

/// Case 1..4 of the G_0^gamma table: (even, odd property), (even, no odd),
/// (odd, even property), (odd, no even).
int zero_component_case(const Lattice& gamma, const SignMatrix& q);

/// G_0^gamma as the span of [G^sigma_a, G^{gamma-sigma}_{-a}] over all nonzero
/// a in C_l and |sigma|_inf <= margin.
GradedPiece zero_root_component(int ell, SignPtr q, const Lattice& gamma, int margin = 3);

/// A^{sigma,r,s}_{a,b} = a t^sigma (e_{r,s} - kappa e_{l+s,l+r}) + i b t^sigma (e_{r,s} + kappa e_{l+s,l+r}).
LieElement a_element(int ell, SignPtr q, const Lattice& sigma, int r, int s, const Rational& a,
                     const Rational& b);

/// Closed form of [A^{sigma,r,s}_{a,b}, A^{tau,s,r}_{c,d}]:
/// p ((ac-bd)(m_r - f m_s) + i(ad+bc)(n_r - f n_s)) t^{sigma+tau}, with
/// m_r = e_{r,r} - kappa_{sigma+tau} e_{l+r,l+r}, n_r likewise with +, and
/// prefactor p given by the caller.
LieElement a_bracket_closed_form(int ell, SignPtr q, const Lattice& sigma, const Lattice& tau,
                                 int r, int s, const Rational& a, const Rational& b,
                                 const Rational& c, const Rational& d, int prefactor);

}  // namespace ealie
