#include "ealie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ealie {

Vec Vec::unit(Key k, Rational c) {
  Vec v;
  v.add_term(k, c);
  return v;
}

Rational Vec::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Vec::add_term(const Key& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Vec::axpy(const Rational& a, const Vec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, c] : x.terms_) add_term(k, a * c);
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Vec& Vec::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  if (v.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [k, c] : v.terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ']';
  }
  return os;
}

Vec combine(const std::vector<Vec>& vecs, const std::vector<Rational>& coeffs) {
  if (vecs.size() != coeffs.size()) throw std::invalid_argument("combine: size mismatch");
  Vec out;
  for (std::size_t i = 0; i < vecs.size(); ++i) out.axpy(coeffs[i], vecs[i]);
  return out;
}

namespace {

void combo_axpy(std::map<std::size_t, Rational>& dst, const Rational& a,
                const std::map<std::size_t, Rational>& src) {
  if (sgn(a) == 0) return;
  for (const auto& [i, c] : src) {
    auto [it, inserted] = dst.try_emplace(i, a * c);
    if (!inserted) {
      it->second += a * c;
      if (sgn(it->second) == 0) dst.erase(it);
    }
  }
}

}  // namespace

Vec Echelon::reduce(Vec v) const {
  for (const auto& [pivot, row] : rows_) {
    Rational c = v.coeff(pivot);
    if (sgn(c) != 0) v.axpy(-c, row.vec);
  }
  return v;
}

bool Echelon::insert(const Vec& v) {
  std::size_t idx = inputs_++;
  Row r{v, {{idx, Rational(1)}}};
  for (const auto& [pivot, row] : rows_) {
    Rational c = r.vec.coeff(pivot);
    if (sgn(c) == 0) continue;
    r.vec.axpy(-c, row.vec);
    combo_axpy(r.combo, -c, row.combo);
  }
  if (r.vec.is_zero()) {
    relations_.push_back(dense(r.combo));
    return false;
  }
  Key pivot = r.vec.leading_key();
  Rational inv = 1 / r.vec.coeff(pivot);
  r.vec *= inv;
  for (auto& [i, c] : r.combo) c *= inv;
  for (auto& [p, row] : rows_) {
    Rational c = row.vec.coeff(pivot);
    if (sgn(c) == 0) continue;
    row.vec.axpy(-c, r.vec);
    combo_axpy(row.combo, -c, r.combo);
  }
  rows_.emplace(std::move(pivot), std::move(r));
  return true;
}

std::vector<Vec> Echelon::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row.vec);
  return out;
}

std::vector<Rational> Echelon::dense(const Combo& c) const {
  std::vector<Rational> out(inputs_, Rational(0));
  for (const auto& [i, v] : c) out[i] = v;
  return out;
}

std::optional<std::vector<Rational>> Echelon::express(const Vec& target) const {
  Vec v = target;
  Combo combo;
  for (const auto& [pivot, row] : rows_) {
    Rational c = v.coeff(pivot);
    if (sgn(c) == 0) continue;
    v.axpy(-c, row.vec);
    combo_axpy(combo, c, row.combo);
  }
  if (!v.is_zero()) return std::nullopt;
  return dense(combo);
}

std::size_t span_rank(const std::vector<Vec>& vecs) {
  Echelon e;
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

std::vector<Vec> span_basis(const std::vector<Vec>& vecs) {
  Echelon e;
  for (const auto& v : vecs) e.insert(v);
  return e.basis();
}

bool span_contains(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  Echelon e;
  for (const auto& v : a) e.insert(v);
  return std::all_of(b.begin(), b.end(), [&](const Vec& v) { return e.contains(v); });
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return span_basis(a) == span_basis(b);
}

std::vector<std::vector<Rational>> kernel_of_images(const std::vector<Vec>& images) {
  Echelon e;
  for (const auto& v : images) e.insert(v);
  std::vector<std::vector<Rational>> out;
  for (auto rel : e.relations()) {
    rel.resize(images.size(), Rational(0));
    out.push_back(std::move(rel));
  }
  return out;
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<Vec>& images,
                                                       const Vec& target) {
  Echelon e;
  for (const auto& v : images) e.insert(v);
  return e.express(target);
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

// Row reduces in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  return rref(m).size();
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix m = *this;
  Rational det(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && sgn(m(p, c)) == 0) ++p;
    if (p == rows_) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(c, j), m(p, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() != rows_ || (!pivots.empty() && pivots.back() == cols_)) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t i = 0; i < rows_; ++i) x[i] = aug(i, cols_);
  return x;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
  QMatrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols_, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rational> QMatrix::leading_principal_minors() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= std::min(rows_, cols_); ++k) {
    QMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
    out.push_back(sub.determinant());
  }
  return out;
}

bool QMatrix::positive_definite() const {
  if (!is_symmetric()) return false;
  auto minors = leading_principal_minors();
  return std::all_of(minors.begin(), minors.end(), [](const Rational& m) { return sgn(m) > 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntLattice IntLattice::generated_by(std::size_t ambient, const std::vector<std::vector<int>>& gens) {
  IntLattice l(ambient);
  for (const auto& g : gens) l.add(g);
  return l;
}

void IntLattice::add(const std::vector<int>& v) {
  std::vector<Integer> w(v.begin(), v.end());
  add(w);
}

void IntLattice::add(const std::vector<Integer>& v) {
  if (v.size() != ambient_) throw std::invalid_argument("lattice vector has wrong dimension");
  basis_.push_back(v);
  reduce_basis();
}

// Hermite normal form by repeated gcd steps on each column.
void IntLattice::reduce_basis() {
  auto& b = basis_;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ambient_ && row < b.size(); ++c) {
    for (;;) {
      std::size_t best = b.size();
      for (std::size_t i = row; i < b.size(); ++i) {
        if (sgn(b[i][c]) == 0) continue;
        if (best == b.size() || abs(b[i][c]) < abs(b[best][c])) best = i;
      }
      if (best == b.size()) break;
      std::swap(b[row], b[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < b.size(); ++i) {
        if (sgn(b[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), b[i][c].get_mpz_t(), b[row][c].get_mpz_t());
        for (std::size_t j = c; j < ambient_; ++j) b[i][j] -= q * b[row][j];
        if (sgn(b[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (row < b.size() && sgn(b[row][c]) != 0) {
      if (sgn(b[row][c]) < 0)
        for (auto& x : b[row]) x = -x;
      for (std::size_t i = 0; i < row; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), b[i][c].get_mpz_t(), b[row][c].get_mpz_t());
        for (std::size_t j = c; j < ambient_; ++j) b[i][j] -= q * b[row][j];
      }
      ++row;
    }
  }
  b.resize(row);
}

bool IntLattice::contains(const std::vector<int>& v) const {
  if (v.size() != ambient_) return false;
  std::vector<Integer> w(v.begin(), v.end());
  for (const auto& r : basis_) {
    std::size_t c = 0;
    while (sgn(r[c]) == 0) ++c;
    if (sgn(w[c]) == 0) continue;
    if (!mpz_divisible_p(w[c].get_mpz_t(), r[c].get_mpz_t())) return false;
    Integer q = w[c] / r[c];
    for (std::size_t j = c; j < ambient_; ++j) w[j] -= q * r[j];
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) == 0; });
}

}  // namespace ealie
