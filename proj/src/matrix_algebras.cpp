#include "ealie/matrix_algebras.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ealie {

Lattice LieAlgebra::degree_of(const Vec& x) const {
  if (x.is_zero()) throw std::invalid_argument("degree of the zero element");
  Lattice d = degree_of_key(x.leading_key());
  for (const auto& [k, c] : x.terms())
    if (degree_of_key(k) != d) throw std::invalid_argument("element is not homogeneous");
  return d;
}

std::string LieAlgebra::describe(const Vec& x) const {
  std::ostringstream os;
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------

SkewTorusAlgebra::SkewTorusAlgebra(int ell, SignMatrix q, bool derived, int margin)
    : ell_(ell), q_(std::make_shared<SignMatrix>(std::move(q))), derived_(derived), margin_(margin) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (margin < 1) throw std::invalid_argument("margin must be at least 1");
}

std::string SkewTorusAlgebra::label() const {
  std::ostringstream os;
  os << (derived_ ? "G" : "B") << "(l=" << ell_ << ",nu=" << q_->nu() << ",q=";
  auto up = q_->upper();
  for (std::size_t i = 0; i < up.size(); ++i) os << (i ? "," : "") << up[i];
  os << ')';
  return os.str();
}

std::vector<int> SkewTorusAlgebra::key_weight(int p, int r) const {
  std::vector<int> w(ell_, 0);
  if (p < ell_) ++w[p]; else --w[p - ell_];
  if (r < ell_) --w[r]; else ++w[r - ell_];
  return w;
}

Vec SkewTorusAlgebra::product(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [kx, cx] : x.terms()) {
    Lattice s(kx.begin() + 3, kx.end());
    for (const auto& [ky, cy] : y.terms()) {
      if (kx[1] != ky[0]) continue;
      Lattice t(ky.begin() + 3, ky.end());
      Rational c = cx * cy;
      if (structure_constant(s, t, *q_) < 0) c = -c;
      int part = kx[2] + ky[2];
      if (part == 2) {
        c = -c;
        part = 0;
      }
      Key k{kx[0], ky[1], part};
      for (std::size_t i = 0; i < s.size(); ++i) k.push_back(s[i] + t[i]);
      out.add_term(k, c);
    }
  }
  return out;
}

Vec SkewTorusAlgebra::bracket(const Vec& x, const Vec& y) const {
  return product(x, y) - product(y, x);
}

Rational SkewTorusAlgebra::form(const Vec& x, const Vec& y) const {
  Rational out(0);
  for (const auto& [kx, cx] : x.terms()) {
    Lattice s(kx.begin() + 3, kx.end());
    for (const auto& [ky, cy] : y.terms()) {
      if (kx[1] != ky[0] || kx[0] != ky[1] || kx[2] != ky[2]) continue;
      Lattice t(ky.begin() + 3, ky.end());
      if (!lattice_is_zero(lattice_add(s, t))) continue;
      Rational c = cx * cy;
      if (structure_constant(s, t, *q_) < 0) c = -c;
      if (kx[2] == 1) c = -c;
      out += c;
    }
  }
  return out;
}

Vec SkewTorusAlgebra::star_vec(const Vec& x) const {
  return to_vec(star(from_vec(ell_, q_, x)));
}

std::vector<Vec> SkewTorusAlgebra::skew_piece(const std::vector<int>& weight, const Lattice& sigma) const {
  auto cache_key = std::make_pair(weight, sigma);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = skew_cache_.find(cache_key);
    if (it != skew_cache_.end()) return it->second;
  }
  std::vector<Vec> monomials, images;
  for (int p = 0; p < 2 * ell_; ++p)
    for (int r = 0; r < 2 * ell_; ++r) {
      if (key_weight(p, r) != weight) continue;
      for (int part : {0, 1}) {
        Key k{p, r, part};
        k.insert(k.end(), sigma.begin(), sigma.end());
        Vec m = Vec::unit(k);
        images.push_back(m + star_vec(m));
        monomials.push_back(std::move(m));
      }
    }
  std::vector<Vec> kernel;
  for (const auto& coeffs : kernel_of_images(images)) kernel.push_back(combine(monomials, coeffs));
  auto basis = span_basis(kernel);
  std::lock_guard<std::mutex> lock(mu_);
  skew_cache_.emplace(cache_key, basis);
  return basis;
}

namespace {

std::vector<std::vector<int>> distinct_weights(int ell, const std::function<std::vector<int>(int, int)>& wt) {
  std::set<std::vector<int>> ws;
  for (int p = 0; p < 2 * ell; ++p)
    for (int r = 0; r < 2 * ell; ++r) ws.insert(wt(p, r));
  return {ws.begin(), ws.end()};
}

}  // namespace

std::vector<Vec> SkewTorusAlgebra::derived_zero_piece(const Lattice& gamma) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = zero_cache_.find(gamma);
    if (it != zero_cache_.end()) return it->second;
  }
  auto weights = distinct_weights(ell_, [this](int p, int r) { return key_weight(p, r); });
  // the span lives in B_0^gamma, so stop once it is all of it
  std::size_t full = skew_piece(std::vector<int>(ell_, 0), gamma).size();
  Echelon span;
  for (const auto& rho : lattice_box(q_->nu(), margin_)) {
    if (span.rank() == full) break;
    Lattice rest = lattice_sub(gamma, rho);
    for (const auto& w : weights) {
      std::vector<int> neg(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
      auto left = skew_piece(w, rho);
      auto right = skew_piece(neg, rest);
      for (const auto& x : left)
        for (const auto& y : right) span.insert(bracket(x, y));
    }
  }
  auto basis = span.basis();
  std::lock_guard<std::mutex> lock(mu_);
  zero_cache_.emplace(gamma, basis);
  return basis;
}

std::vector<Vec> SkewTorusAlgebra::homogeneous_basis(const Lattice& sigma) const {
  if (static_cast<int>(sigma.size()) != q_->nu()) throw std::invalid_argument("degree has wrong length");
  std::vector<Vec> out;
  for (const auto& w : distinct_weights(ell_, [this](int p, int r) { return key_weight(p, r); })) {
    bool zero = std::all_of(w.begin(), w.end(), [](int v) { return v == 0; });
    auto piece = (zero && derived_) ? derived_zero_piece(sigma) : skew_piece(w, sigma);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

ToralBasis SkewTorusAlgebra::toral() const {
  ToralBasis h;
  Lattice zero(q_->nu(), 0);
  for (int r = 1; r <= ell_; ++r) {
    h.elements.push_back(to_vec(hdot(ell_, q_, r, zero)));
    h.finite_slots.push_back(r - 1);
  }
  return h;
}

Lattice SkewTorusAlgebra::degree_of_key(const Key& k) const { return Lattice(k.begin() + 3, k.end()); }

std::string SkewTorusAlgebra::describe(const Vec& x) const {
  std::ostringstream os;
  os << from_vec(ell_, q_, x);
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

ClassicalAlgebra::ClassicalAlgebra(const std::string& type, int rank, std::vector<std::uint64_t> primes)
    : type_(type), rank_(rank), primes_(std::move(primes)) {
  if (type == "C") {
    if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
    n_ = 2 * rank;
    scale_ = 1;
  } else if (type == "D") {
    if (rank < 4) throw std::invalid_argument("type D needs rank >= 4");
    n_ = 2 * rank;
    scale_ = 1;
  } else if (type == "B") {
    if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
    n_ = 2 * rank + 1;
    scale_ = make_rational(1, 2);
  } else {
    throw std::invalid_argument("classical construction supports types B, C, D; got " + type);
  }
  std::set<std::uint64_t> seen;
  for (auto p : primes_) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (!seen.insert(p).second) throw std::invalid_argument("primes must be distinct");
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes_.size()); ++mask) {
    std::uint64_t a = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (mask & (std::size_t{1} << i)) a *= primes_[i];
    scalars_.push_back(a);
  }
  std::sort(scalars_.begin(), scalars_.end());

  // J defines the algebra {X : X^t J + J X = 0}.
  std::vector<std::vector<int>> j(n_, std::vector<int>(n_, 0));
  for (int r = 0; r < rank; ++r) {
    j[r][rank + r] = 1;
    j[rank + r][r] = (type == "C") ? -1 : 1;
  }
  if (type == "B") j[2 * rank][2 * rank] = 1;
  std::vector<Vec> monomials, images;
  for (int p = 0; p < n_; ++p)
    for (int r = 0; r < n_; ++r) {
      Vec img;
      for (int s = 0; s < n_; ++s) {
        if (j[p][s]) img.add_term({r, s, 1}, Rational(j[p][s]));  // e_rp J
        if (j[s][p]) img.add_term({s, r, 1}, Rational(j[s][p]));  // J e_pr
      }
      monomials.push_back(Vec::unit({p, r, 1}));
      images.push_back(img);
    }
  std::vector<Vec> kernel;
  for (const auto& c : kernel_of_images(images)) kernel.push_back(combine(monomials, c));
  basis_ = span_basis(kernel);
}

std::string ClassicalAlgebra::label() const {
  std::ostringstream os;
  os << type_ << rank_;
  if (!primes_.empty()) {
    os << " over Q(";
    for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << "sqrt" << primes_[i];
    os << ')';
  }
  return os.str();
}

Vec ClassicalAlgebra::tensor(const Vec& x, const SqrtFieldElement& c) const {
  Vec out;
  for (const auto& [k, v] : x.terms()) {
    auto prod = SqrtFieldElement::sqrt_of(static_cast<std::uint64_t>(k[2]), v) * c;
    for (const auto& [a, w] : prod.coefficients()) out.add_term({k[0], k[1], static_cast<int>(a)}, w);
  }
  return out;
}

std::vector<Vec> ClassicalAlgebra::homogeneous_basis(const Lattice& sigma) const {
  if (!sigma.empty()) return {};
  std::vector<Vec> out;
  for (const auto& b : basis_)
    for (auto a : scalars_) out.push_back(tensor(b, SqrtFieldElement::sqrt_of(a)));
  return out;
}

Vec ClassicalAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::uint64_t a = kx[2], b = ky[2];
      std::uint64_t g = std::gcd(a, b);
      int ab = static_cast<int>((a / g) * (b / g));
      Rational c = cx * cy * Rational(static_cast<unsigned long>(g));
      if (kx[1] == ky[0]) out.add_term({kx[0], ky[1], ab}, c);
      if (ky[1] == kx[0]) out.add_term({ky[0], kx[1], ab}, -c);
    }
  return out;
}

Rational ClassicalAlgebra::form(const Vec& x, const Vec& y) const {
  Rational out(0);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      if (kx[1] == ky[0] && kx[0] == ky[1] && kx[2] == ky[2]) out += cx * cy * kx[2];
  return out * scale_;
}

ToralBasis ClassicalAlgebra::toral() const {
  ToralBasis h;
  for (int r = 0; r < rank_; ++r) {
    Vec v;
    v.add_term({r, r, 1}, Rational(1));
    v.add_term({rank_ + r, rank_ + r, 1}, Rational(-1));
    h.elements.push_back(v);
    h.finite_slots.push_back(r);
  }
  return h;
}

std::string ClassicalAlgebra::describe(const Vec& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*e" << k[0] + 1 << ',' << k[1] + 1;
    if (k[2] != 1) os << "*sqrt" << k[2];
  }
  return os.str();
}

}  // namespace ealie
