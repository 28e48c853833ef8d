#pragma once

// Abstract interface for the Z^nu-graded Lie algebras handled by the
// decomposition and the axiom suites. Elements are sparse vectors over Q in a
// monomial basis owned by the algebra.

#include "ealie/linalg.hpp"
#include "ealie/quantum_torus.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ealie {

/// Commuting elements acting diagonally on homogeneous bases. The eigenvalue
/// of elements[finite_slots[k]] is the k-th epsilon-coordinate of a weight;
/// elements[degree_slots[i]] (when present) has the i-th lattice coordinate
/// as eigenvalue. Without degree slots the lattice grading is external.
struct ToralBasis {
  std::vector<Vec> elements;
  std::vector<int> finite_slots;
  std::vector<int> degree_slots;
};

class LieAlgebra {
 public:
  virtual ~LieAlgebra() = default;

  virtual std::string label() const = 0;
  /// Finite root system type letter and rank, e.g. ("C", 2).
  virtual std::string root_type() const = 0;
  virtual int root_rank() const = 0;
  /// Length of finite weights (epsilon-coordinates).
  virtual int weight_dim() const = 0;
  virtual int grading_rank() const = 0;

  /// Basis of the lattice-degree piece L^sigma (finite-dimensional).
  virtual std::vector<Vec> homogeneous_basis(const Lattice& sigma) const = 0;
  virtual Vec bracket(const Vec& x, const Vec& y) const = 0;
  virtual Rational form(const Vec& x, const Vec& y) const = 0;
  virtual ToralBasis toral() const = 0;
  /// Lattice degree of a monomial key.
  virtual Lattice degree_of_key(const Key& k) const = 0;

  /// True when the toral basis sees the lattice degree (degree slots).
  bool grading_is_internal() const {
    return grading_rank() == 0 || !toral().degree_slots.empty();
  }
  /// Lattice degree of a homogeneous element; throws if it is not homogeneous.
  Lattice degree_of(const Vec& x) const;
  /// Readable rendering of an element.
  virtual std::string describe(const Vec& x) const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

}  // namespace ealie
