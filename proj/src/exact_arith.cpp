#include "ealie/exact_arith.hpp"

#include <algorithm>
#include <numeric>
#include <vector>
#include <sstream>
#include <stdexcept>

namespace ealie {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (sgn(r.get_den()) == 0) throw std::domain_error("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational GaussianRational::inverse() const {
  Rational n = re_ * re_ + im_ * im_;
  if (sgn(n) == 0) throw std::domain_error("inverse of zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  os << x.re_;
  if (sgn(x.im_) >= 0) os << '+';
  return os << x.im_ << 'i';
}

GaussianRational gq_mul(const GaussianRational& x, const GaussianRational& y) { return x * y; }
GaussianRational gq_conj(const GaussianRational& x) { return x.conj(); }

bool is_square_free(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

SqrtFieldElement::SqrtFieldElement(Rational r) { add_term(1, r); }

SqrtFieldElement SqrtFieldElement::sqrt_of(std::uint64_t a, Rational c) {
  if (!is_square_free(a)) {
    throw std::invalid_argument("sqrt basis element must be square-free: " + std::to_string(a));
  }
  SqrtFieldElement x;
  x.add_term(a, c);
  return x;
}

Rational SqrtFieldElement::coefficient(std::uint64_t a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SqrtFieldElement::add_term(std::uint64_t a, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

SqrtFieldElement& SqrtFieldElement::operator+=(const SqrtFieldElement& o) {
  for (const auto& [a, c] : o.coeffs_) add_term(a, c);
  return *this;
}

SqrtFieldElement& SqrtFieldElement::operator-=(const SqrtFieldElement& o) {
  for (const auto& [a, c] : o.coeffs_) add_term(a, -c);
  return *this;
}

SqrtFieldElement& SqrtFieldElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [a, v] : coeffs_) v *= c;
  return *this;
}

SqrtFieldElement operator*(const SqrtFieldElement& x, const SqrtFieldElement& y) {
  SqrtFieldElement out;
  for (const auto& [a, ca] : x.coeffs_) {
    for (const auto& [b, cb] : y.coeffs_) {
      // a, b square-free: ab = g^2 * (a/g)(b/g) with g = gcd(a, b), and the
      // cofactor (a/g)(b/g) is again square-free.
      std::uint64_t g = std::gcd(a, b);
      out.add_term((a / g) * (b / g), ca * cb * Rational(static_cast<unsigned long>(g)));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SqrtFieldElement& x) {
  if (x.coeffs_.empty()) return os << '0';
  bool first = true;
  for (const auto& [a, c] : x.coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (a != 1) os << "*sqrt(" << a << ')';
  }
  return os;
}

// Multiplying by the image under sqrt(p) -> -sqrt(p) removes p from the
// support; after every prime is cleared the product is rational.
SqrtFieldElement SqrtFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero square-root field element");
  std::vector<std::uint64_t> primes;
  for (const auto& [a, c] : coeffs_) {
    std::uint64_t n = a;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
    if (n > 1) primes.push_back(n);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  SqrtFieldElement cur = *this;
  SqrtFieldElement acc(Rational(1));
  for (auto p : primes) {
    SqrtFieldElement conj;
    for (const auto& [a, c] : cur.coeffs_) conj.add_term(a, a % p == 0 ? Rational(-c) : c);
    acc = acc * conj;
    cur = cur * conj;
  }
  return acc * Rational(1 / cur.rational_part());
}

SqrtFieldElement sf_mul(const SqrtFieldElement& x, const SqrtFieldElement& y) { return x * y; }

Rational sqrt_field_form(const SqrtFieldElement& x, const SqrtFieldElement& y) {
  return (x * y).rational_part();
}

}  // namespace ealie
