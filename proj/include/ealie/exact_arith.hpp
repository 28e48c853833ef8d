#pragma once

// Exact scalars: GMP rationals, Gaussian rationals a + b*i, and elements of
// the multiquadratic field spanned by square roots of square-free integers.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace ealie {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

/// Always "p/q", also for integers ("2/1"); used by the export format.
std::string to_fraction_string(const Rational& r);

/// a + b*i with a, b rational. All dimension counts treat 1 and i as
/// independent basis symbols over Q.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Throws std::domain_error for zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

 private:
  Rational re_{0};
  Rational im_{0};
};

GaussianRational gq_mul(const GaussianRational& x, const GaussianRational& y);
GaussianRational gq_conj(const GaussianRational& x);

bool is_square_free(std::uint64_t n);

/// Element of Q(sqrt p_1, ..., sqrt p_k) in the basis {sqrt a : a square-free}.
/// The key 1 is the rational part.
class SqrtFieldElement {
 public:
  SqrtFieldElement() = default;
  explicit SqrtFieldElement(Rational r);
  /// c * sqrt(a); a must be square-free and positive.
  static SqrtFieldElement sqrt_of(std::uint64_t a, Rational c = Rational(1));

  const std::map<std::uint64_t, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::uint64_t a) const;
  Rational rational_part() const { return coefficient(1); }
  bool is_zero() const { return coeffs_.empty(); }
  /// Throws std::domain_error for zero.
  SqrtFieldElement inverse() const;

  SqrtFieldElement& operator+=(const SqrtFieldElement& o);
  SqrtFieldElement& operator-=(const SqrtFieldElement& o);
  SqrtFieldElement& operator*=(const Rational& c);

  friend SqrtFieldElement operator+(SqrtFieldElement a, const SqrtFieldElement& b) { return a += b; }
  friend SqrtFieldElement operator-(SqrtFieldElement a, const SqrtFieldElement& b) { return a -= b; }
  friend SqrtFieldElement operator*(SqrtFieldElement a, const Rational& c) { return a *= c; }
  friend SqrtFieldElement operator*(const SqrtFieldElement& a, const SqrtFieldElement& b);
  friend bool operator==(const SqrtFieldElement& a, const SqrtFieldElement& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend std::ostream& operator<<(std::ostream& os, const SqrtFieldElement& x);

 private:
  void add_term(std::uint64_t a, const Rational& c);
  std::map<std::uint64_t, Rational> coeffs_;
};

/// sqrt(a)*sqrt(b) = g*sqrt(ab/g^2), g^2 the largest square dividing ab.
SqrtFieldElement sf_mul(const SqrtFieldElement& x, const SqrtFieldElement& y);

/// f(x, y) = rational part of x*y, so f(sqrt a, sqrt b) = delta_{a,b} * a.
Rational sqrt_field_form(const SqrtFieldElement& x, const SqrtFieldElement& y);

}  // namespace ealie
