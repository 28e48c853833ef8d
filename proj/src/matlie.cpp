#include "ealie/matlie.hpp"

#include <stdexcept>
#include <string>

namespace ealie {

namespace {

void check_compatible(const LieElement& x, const LieElement& y) {
  if (x.ell() != y.ell()) throw std::invalid_argument("matrix size mismatch");
  if (!(*x.signs() == *y.signs())) throw std::invalid_argument("mismatched sign matrices");
}

GaussianRational scalar(int v) { return GaussianRational(Rational(v)); }

}  // namespace

LieElement::LieElement(int ell, SignPtr q)
    : ell_(ell), q_(std::move(q)), entries_(4 * ell * ell, TorusElement(q_)) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
}

LieElement LieElement::unit(int ell, SignPtr q, int p, int r, const Lattice& sigma,
                            GaussianRational c) {
  LieElement x(ell, q);
  if (p < 1 || r < 1 || p > 2 * ell || r > 2 * ell) {
    throw std::invalid_argument("matrix index out of range");
  }
  x.at(p, r) = TorusElement::monomial(std::move(q), sigma, std::move(c));
  return x;
}

bool LieElement::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_compatible(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_compatible(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

LieElement& LieElement::operator*=(const GaussianRational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
  return a.ell_ == b.ell_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const LieElement& x) {
  bool first = true;
  for (int p = 1; p <= x.size(); ++p)
    for (int r = 1; r <= x.size(); ++r) {
      if (x.at(p, r).is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << '[' << x.at(p, r) << "]e" << p << ',' << r;
    }
  if (first) os << '0';
  return os;
}

LieElement hdot(int ell, SignPtr q, int r, const Lattice& sigma) {
  return LieElement::unit(ell, q, r, r, sigma) - LieElement::unit(ell, q, ell + r, ell + r, sigma);
}

LieElement hddot(int ell, SignPtr q, int r, const Lattice& sigma) {
  return LieElement::unit(ell, q, r, r, sigma) + LieElement::unit(ell, q, ell + r, ell + r, sigma);
}

LieElement mat_mul(const LieElement& x, const LieElement& y) {
  check_compatible(x, y);
  LieElement z(x.ell(), x.signs());
  int n = x.size();
  for (int p = 1; p <= n; ++p)
    for (int k = 1; k <= n; ++k) {
      if (x.at(p, k).is_zero()) continue;
      for (int r = 1; r <= n; ++r) {
        if (y.at(k, r).is_zero()) continue;
        z.at(p, r) += torus_mul(x.at(p, k), y.at(k, r));
      }
    }
  return z;
}

LieElement mat_bracket(const LieElement& x, const LieElement& y) {
  return mat_mul(x, y) - mat_mul(y, x);
}

// E^{-1} Y E is a signed permutation of Y: with pi(p) = p +- l,
// (E^{-1} Y E)_{p,q} = s(p) s(q) Y_{pi(p), pi(q)}, s = -1 on the first block.
LieElement star(const LieElement& x) {
  int ell = x.ell();
  LieElement z(ell, x.signs());
  auto pi = [ell](int p) { return p <= ell ? p + ell : p - ell; };
  auto s = [ell](int p) { return p <= ell ? -1 : 1; };
  for (int p = 1; p <= x.size(); ++p)
    for (int r = 1; r <= x.size(); ++r) {
      // Y = bar(X)^t, so Y_{a,b} = bar(X_{b,a}).
      const TorusElement& src = x.at(pi(r), pi(p));
      if (src.is_zero()) continue;
      z.at(p, r) = torus_bar(src) * scalar(s(p) * s(r));
    }
  return z;
}

Rational trace_form(const LieElement& x, const LieElement& y) {
  check_compatible(x, y);
  Rational out(0);
  for (int p = 1; p <= x.size(); ++p)
    for (int k = 1; k <= x.size(); ++k) {
      if (x.at(p, k).is_zero() || y.at(k, p).is_zero()) continue;
      out += torus_form(x.at(p, k), y.at(k, p));
    }
  return out;
}

Vec to_vec(const LieElement& x) {
  Vec v;
  for (int p = 1; p <= x.size(); ++p)
    for (int r = 1; r <= x.size(); ++r)
      for (const auto& [sigma, c] : x.at(p, r).terms()) {
        Key k{p - 1, r - 1, 0};
        k.insert(k.end(), sigma.begin(), sigma.end());
        v.add_term(k, c.re());
        k[2] = 1;
        v.add_term(k, c.im());
      }
  return v;
}

LieElement from_vec(int ell, SignPtr q, const Vec& v) {
  LieElement x(ell, q);
  for (const auto& [k, c] : v.terms()) {
    Lattice sigma(k.begin() + 3, k.end());
    GaussianRational g = k[2] == 0 ? GaussianRational(c) : GaussianRational(Rational(0), c);
    x.at(k[0] + 1, k[1] + 1).add_term(sigma, g);
  }
  return x;
}

namespace {

enum class Shape { kZero, kDiff, kSum, kNegSum, kLong, kNegLong };

struct Parsed {
  Shape shape;
  int r = 0;
  int s = 0;
};

Parsed parse_c_root(const std::vector<int>& w, int ell) {
  if (static_cast<int>(w.size()) != ell) throw std::invalid_argument("weight has wrong length");
  std::vector<int> idx;
  for (int i = 0; i < ell; ++i)
    if (w[i] != 0) idx.push_back(i);
  if (idx.empty()) return {Shape::kZero};
  if (idx.size() == 1) {
    int v = w[idx[0]];
    if (v == 2) return {Shape::kLong, idx[0] + 1};
    if (v == -2) return {Shape::kNegLong, idx[0] + 1};
  }
  if (idx.size() == 2) {
    int a = w[idx[0]], b = w[idx[1]];
    int i = idx[0] + 1, j = idx[1] + 1;
    if (a == 1 && b == -1) return {Shape::kDiff, i, j};
    if (a == -1 && b == 1) return {Shape::kDiff, j, i};
    if (a == 1 && b == 1) return {Shape::kSum, i, j};
    if (a == -1 && b == -1) return {Shape::kNegSum, i, j};
  }
  throw std::invalid_argument("finite part is not a root of C_l");
}

}  // namespace

ParityProperties parity_properties(const Lattice& gamma, const SignMatrix& q) {
  // kappa depends only on sigma mod 2, so sigma in {0,1}^nu covers every
  // decomposition class.
  ParityProperties out{false, false};
  for (const auto& sigma : lattice_box(q.nu(), 1)) {
    bool representative = true;
    for (int x : sigma) representative = representative && x >= 0;
    if (!representative) continue;
    int k = kappa(sigma, q) * kappa(lattice_sub(gamma, sigma), q);
    (k > 0 ? out.even : out.odd) = true;
  }
  return out;
}

int zero_component_case(const Lattice& gamma, const SignMatrix& q) {
  bool even = kappa(gamma, q) > 0;
  auto props = parity_properties(gamma, q);
  if (even) return props.odd ? 1 : 2;
  return props.even ? 3 : 4;
}

GradedPiece skew_root_basis(int ell, SignPtr q, const Root& root) {
  Parsed p = parse_c_root(root.finite, ell);
  const Lattice& sigma = root.lattice;
  int k = kappa(sigma, *q);
  GaussianRational i = GaussianRational::i();
  auto e = [&](int a, int b) { return LieElement::unit(ell, q, a, b, sigma); };
  GradedPiece out{root, {}};
  int r = p.r, s = p.s;
  switch (p.shape) {
    case Shape::kDiff:
      out.basis.push_back(e(r, s) - e(ell + s, ell + r) * scalar(k));
      out.basis.push_back((e(r, s) + e(ell + s, ell + r) * scalar(k)) * i);
      break;
    case Shape::kSum:
      out.basis.push_back(e(r, ell + s) + e(s, ell + r) * scalar(k));
      out.basis.push_back((e(r, ell + s) - e(s, ell + r) * scalar(k)) * i);
      break;
    case Shape::kNegSum:
      out.basis.push_back(e(ell + r, s) + e(ell + s, r) * scalar(k));
      out.basis.push_back((e(ell + r, s) - e(ell + s, r) * scalar(k)) * i);
      break;
    case Shape::kLong:
      out.basis.push_back(k > 0 ? e(r, ell + r) : e(r, ell + r) * i);
      break;
    case Shape::kNegLong:
      out.basis.push_back(k > 0 ? e(ell + r, r) : e(ell + r, r) * i);
      break;
    case Shape::kZero: {
      auto hd = [&](int j) { return hdot(ell, q, j, sigma); };
      auto hh = [&](int j) { return hddot(ell, q, j, sigma); };
      switch (zero_component_case(sigma, *q)) {
        case 1:
          for (int j = 1; j <= ell; ++j) out.basis.push_back(hd(j));
          for (int j = 1; j <= ell; ++j) out.basis.push_back(hh(j) * i);
          break;
        case 2:
          for (int j = 1; j <= ell; ++j) out.basis.push_back(hd(j));
          for (int j = 1; j < ell; ++j) out.basis.push_back((hh(j) - hh(j + 1)) * i);
          break;
        case 3:
          for (int j = 1; j <= ell; ++j) out.basis.push_back(hh(j));
          for (int j = 1; j <= ell; ++j) out.basis.push_back(hd(j) * i);
          break;
        default:
          for (int j = 1; j < ell; ++j) out.basis.push_back(hh(j) - hh(j + 1));
          for (int j = 1; j <= ell; ++j) out.basis.push_back(hd(j) * i);
          break;
      }
      break;
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> nonzero_c_roots(int ell) {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < ell; ++r) {
    for (int sgn : {1, -1}) {
      std::vector<int> w(ell, 0);
      w[r] = 2 * sgn;
      out.push_back(w);
    }
    for (int s = r + 1; s < ell; ++s)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          std::vector<int> w(ell, 0);
          w[r] = a;
          w[s] = b;
          out.push_back(w);
        }
  }
  return out;
}

}  // namespace

GradedPiece zero_root_component(int ell, SignPtr q, const Lattice& gamma, int margin) {
  Echelon span;
  for (const auto& w : nonzero_c_roots(ell)) {
    std::vector<int> neg(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) neg[k] = -w[k];
    for (const auto& sigma : lattice_box(q->nu(), margin)) {
      auto left = skew_root_basis(ell, q, Root{w, sigma});
      auto right = skew_root_basis(ell, q, Root{neg, lattice_sub(gamma, sigma)});
      for (const auto& x : left.basis)
        for (const auto& y : right.basis) span.insert(to_vec(mat_bracket(x, y)));
    }
  }
  GradedPiece out{Root{std::vector<int>(ell, 0), gamma}, {}};
  for (const auto& v : span.basis()) out.basis.push_back(from_vec(ell, q, v));
  return out;
}

LieElement a_element(int ell, SignPtr q, const Lattice& sigma, int r, int s, const Rational& a,
                     const Rational& b) {
  int k = kappa(sigma, *q);
  auto e = [&](int x, int y) { return LieElement::unit(ell, q, x, y, sigma); };
  return (e(r, s) - e(ell + s, ell + r) * scalar(k)) * GaussianRational(a) +
         (e(r, s) + e(ell + s, ell + r) * scalar(k)) * GaussianRational(Rational(0), b);
}

LieElement a_bracket_closed_form(int ell, SignPtr q, const Lattice& sigma, const Lattice& tau,
                                 int r, int s, const Rational& a, const Rational& b,
                                 const Rational& c, const Rational& d, int prefactor) {
  Lattice st = lattice_add(sigma, tau);
  int k = kappa(st, *q);
  int f = cocycles(sigma, tau, *q).f;
  auto e = [&](int x, int y) { return LieElement::unit(ell, q, x, y, st); };
  auto m = [&](int j) { return e(j, j) - e(ell + j, ell + j) * scalar(k); };
  auto n = [&](int j) { return e(j, j) + e(ell + j, ell + j) * scalar(k); };
  LieElement out = (m(r) - m(s) * scalar(f)) * GaussianRational(a * c - b * d) +
                   (n(r) - n(s) * scalar(f)) * GaussianRational(Rational(0), a * d + b * c);
  return out * scalar(prefactor);
}

}  // namespace ealie
