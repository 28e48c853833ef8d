#pragma once

// Small random generators for the property tests. Seeds are fixed per test so
// failures reproduce.

#include "ealie/exact_arith.hpp"
#include "ealie/quantum_torus.hpp"

#include <random>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline int integer(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ealie::Rational rational(Rng& rng, int bound = 9) {
  int num = integer(rng, -bound, bound);
  int den = integer(rng, 1, bound);
  return ealie::make_rational(num, den);
}

inline ealie::Rational nonzero_rational(Rng& rng, int bound = 9) {
  for (;;) {
    auto r = rational(rng, bound);
    if (sgn(r) != 0) return r;
  }
}

inline ealie::GaussianRational gaussian(Rng& rng, int bound = 9) {
  return {rational(rng, bound), rational(rng, bound)};
}

inline ealie::Lattice lattice(Rng& rng, int nu, int w) {
  ealie::Lattice s(nu);
  for (auto& x : s) x = integer(rng, -w, w);
  return s;
}

inline ealie::SqrtFieldElement sqrt_element(Rng& rng, const std::vector<std::uint64_t>& basis) {
  ealie::SqrtFieldElement x;
  for (auto a : basis) x += ealie::SqrtFieldElement::sqrt_of(a, rational(rng));
  return x;
}

}  // namespace gen
