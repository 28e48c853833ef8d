#pragma once

#include <compare>
#include <ostream>
#include <vector>

namespace ealie {

/// A root of a windowed algebra: finite weight in epsilon-coordinates plus the
/// lattice degree. Isotropic exactly when the finite part vanishes.
struct Root {
  std::vector<int> finite;
  std::vector<int> lattice;

  bool finite_is_zero() const {
    for (int x : finite)
      if (x != 0) return false;
    return true;
  }
  Root operator-() const {
    Root r = *this;
    for (auto& x : r.finite) x = -x;
    for (auto& x : r.lattice) x = -x;
    return r;
  }
  friend Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.finite.size(); ++i) r.finite[i] += b.finite[i];
    for (std::size_t i = 0; i < r.lattice.size(); ++i) r.lattice[i] += b.lattice[i];
    return r;
  }
  friend Root operator*(int n, const Root& a) {
    Root r = a;
    for (auto& x : r.finite) x *= n;
    for (auto& x : r.lattice) x *= n;
    return r;
  }
  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Root& r) {
    os << '(';
    for (std::size_t i = 0; i < r.finite.size(); ++i) os << (i ? "," : "") << r.finite[i];
    os << " | ";
    for (std::size_t i = 0; i < r.lattice.size(); ++i) os << (i ? "," : "") << r.lattice[i];
    return os << ')';
  }
};

}  // namespace ealie
