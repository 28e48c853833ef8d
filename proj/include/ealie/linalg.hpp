#pragma once

// Exact linear algebra over Q: sparse coordinate vectors keyed by monomial
// labels, an incremental reduced row echelon form that can also track how each
// row was obtained from the inserted vectors, small dense matrices for Gram
// computations, and integer lattices.

#include "ealie/exact_arith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

namespace ealie {

/// Label of a canonical basis monomial. Its meaning is owned by the algebra
/// that produced it; the linear algebra only needs the total order.
using Key = std::vector<int>;

/// Finitely supported map Key -> Q.
class Vec {
 public:
  using Terms = std::map<Key, Rational>;

  Vec() = default;
  static Vec unit(Key k, Rational c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Key& k) const;
  const Key& leading_key() const { return terms_.begin()->first; }

  void add_term(const Key& k, const Rational& c);
  /// this += a * x
  void axpy(const Rational& a, const Vec& x);

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Rational(-1); }
  friend Vec operator*(Vec a, const Rational& c) { return a *= c; }
  friend Vec operator*(const Rational& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const Vec& v);

 private:
  Terms terms_;
};

/// Linear combination sum_i coeffs[i] * vecs[i].
Vec combine(const std::vector<Vec>& vecs, const std::vector<Rational>& coeffs);

/// Incremental reduced row echelon form. Pivots are the smallest keys, so the
/// basis is canonical for the spanned subspace.
class Echelon {
 public:
  Echelon() = default;

  /// Inserts v (recorded under the next input index). Returns true when v was
  /// independent of what is already spanned.
  bool insert(const Vec& v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }

  /// Canonical basis: the reduced rows ordered by pivot.
  std::vector<Vec> basis() const;

  /// Coefficients c over the inserted vectors with sum c_i v_i = target.
  std::optional<std::vector<Rational>> express(const Vec& target) const;

  /// Linear relations among the inserted vectors (one per dependent insert).
  const std::vector<std::vector<Rational>>& relations() const { return relations_; }

 private:
  using Combo = std::map<std::size_t, Rational>;
  struct Row {
    Vec vec;
    Combo combo;
  };
  std::vector<Rational> dense(const Combo& c) const;

  std::map<Key, Row> rows_;  // pivot -> row
  std::size_t inputs_ = 0;
  std::vector<std::vector<Rational>> relations_;
};

std::size_t span_rank(const std::vector<Vec>& vecs);
/// Canonical basis of span(vecs).
std::vector<Vec> span_basis(const std::vector<Vec>& vecs);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);
bool span_contains(const std::vector<Vec>& a, const std::vector<Vec>& b);

/// Basis of the kernel of the linear map sending basis vector j to images[j],
/// as coefficient vectors of length images.size().
std::vector<std::vector<Rational>> kernel_of_images(const std::vector<Vec>& images);

/// Solves sum_j c_j images[j] = target; the solution with free variables set
/// to zero in input order.
std::optional<std::vector<Rational>> solve_combination(const std::vector<Vec>& images,
                                                       const Vec& target);

/// Small dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  Rational determinant() const;
  bool is_symmetric() const;
  QMatrix transpose() const;
  /// Unique solution of A x = b for square nonsingular A.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  /// Basis of {x : A x = 0}.
  std::vector<std::vector<Rational>> kernel() const;
  std::vector<Rational> leading_principal_minors() const;
  /// Positive definite by leading principal minors (symmetric input).
  bool positive_definite() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend std::ostream& operator<<(std::ostream& os, const QMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Subgroup of Z^n generated by integer vectors, kept in row Hermite normal
/// form.
class IntLattice {
 public:
  explicit IntLattice(std::size_t ambient) : ambient_(ambient) {}
  static IntLattice generated_by(std::size_t ambient, const std::vector<std::vector<int>>& gens);

  void add(const std::vector<Integer>& v);
  void add(const std::vector<int>& v);
  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<std::vector<Integer>>& basis() const { return basis_; }
  bool contains(const std::vector<int>& v) const;

 private:
  void reduce_basis();
  std::size_t ambient_;
  std::vector<std::vector<Integer>> basis_;
};

}  // namespace ealie
