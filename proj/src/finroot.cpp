#include "ealie/finroot.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ealie {

RootType parse_root_type(const std::string& s) {
  static const std::map<std::string, RootType> names{
      {"A", RootType::A}, {"B", RootType::B}, {"C", RootType::C}, {"D", RootType::D},
      {"E", RootType::E}, {"F", RootType::F}, {"G", RootType::G}, {"BC", RootType::BC}};
  auto it = names.find(s);
  if (it == names.end()) throw std::invalid_argument("unknown root system type: " + s);
  return it->second;
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::BC: return "BC";
  }
  return "?";
}

Rational form_inner(const QMatrix& form, const Weight& a, const Weight& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0 || sgn(form(i, j)) == 0) continue;
      s += form(i, j) * a[i] * b[j];
    }
  }
  return s;
}

Weight reflect(const Weight& alpha, const Weight& beta, const QMatrix& form) {
  Rational aa = form_inner(form, alpha, alpha);
  if (sgn(aa) == 0) throw std::invalid_argument("reflection in an isotropic vector");
  Rational c = 2 * form_inner(form, beta, alpha) / aa;
  if (c.get_den() != 1) throw std::domain_error("reflection leaves the integer lattice");
  long n = c.get_num().get_si();
  Weight out = beta;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<int>(n) * alpha[i];
  return out;
}

FiniteRootSystem::FiniteRootSystem(std::string label, QMatrix form, std::set<Weight> roots,
                                   std::vector<Weight> simple)
    : label_(std::move(label)), form_(std::move(form)), roots_(std::move(roots)),
      simple_(std::move(simple)) {
  roots_.insert(Weight(form_.rows(), 0));
}

Rational FiniteRootSystem::inner(const Weight& a, const Weight& b) const {
  return form_inner(form_, a, b);
}

std::vector<Weight> FiniteRootSystem::nonzero_roots() const {
  std::vector<Weight> out;
  for (const auto& r : roots_)
    if (std::any_of(r.begin(), r.end(), [](int x) { return x != 0; })) out.push_back(r);
  return out;
}

std::vector<Weight> FiniteRootSystem::extra_long_roots() const {
  std::vector<Weight> out;
  for (const auto& r : nonzero_roots()) {
    if (std::any_of(r.begin(), r.end(), [](int x) { return x % 2 != 0; })) continue;
    Weight half = r;
    for (auto& x : half) x /= 2;
    if (contains(half)) out.push_back(r);
  }
  return out;
}

std::vector<Weight> FiniteRootSystem::short_roots() const {
  auto ex = extra_long_roots();
  std::vector<Weight> rest;
  for (const auto& r : nonzero_roots())
    if (std::find(ex.begin(), ex.end(), r) == ex.end()) rest.push_back(r);
  if (rest.empty()) return rest;
  Rational m = norm(rest.front());
  for (const auto& r : rest) m = std::min(m, norm(r));
  std::vector<Weight> out;
  for (const auto& r : rest)
    if (norm(r) == m) out.push_back(r);
  return out;
}

std::vector<Weight> FiniteRootSystem::long_roots() const {
  auto ex = extra_long_roots();
  auto sh = short_roots();
  std::vector<Weight> out;
  for (const auto& r : nonzero_roots())
    if (std::find(ex.begin(), ex.end(), r) == ex.end() && std::find(sh.begin(), sh.end(), r) == sh.end())
      out.push_back(r);
  return out;
}

FiniteRootSystem FiniteRootSystem::reduced() const {
  auto ex = extra_long_roots();
  std::set<Weight> kept;
  for (const auto& r : roots_)
    if (std::find(ex.begin(), ex.end(), r) == ex.end()) kept.insert(r);
  return FiniteRootSystem(label_ + "_red", form_, kept, simple_);
}

std::vector<std::vector<int>> FiniteRootSystem::cartan_matrix() const {
  std::size_t n = simple_.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = 2 * inner(simple_[i], simple_[j]) / norm(simple_[j]);
      a[i][j] = static_cast<int>(c.get_num().get_si());
    }
  return a;
}

namespace {

Weight unit(int n, int i, int c = 1) {
  Weight w(n, 0);
  w[i] = c;
  return w;
}

Weight pm(int n, int i, int a, int j, int b) {
  Weight w(n, 0);
  w[i] += a;
  w[j] += b;
  return w;
}

QMatrix scalar_form(int n, const Rational& c) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

// Reflection closure of the simple roots in simple-root coordinates.
std::set<Weight> closure(const std::vector<Weight>& simple, const QMatrix& form) {
  std::set<Weight> roots;
  std::vector<Weight> todo;
  for (const auto& s : simple) {
    Weight neg = s;
    for (auto& x : neg) x = -x;
    for (const auto& w : {s, neg})
      if (roots.insert(w).second) todo.push_back(w);
  }
  while (!todo.empty()) {
    Weight w = todo.back();
    todo.pop_back();
    for (const auto& s : simple) {
      Weight r = reflect(s, w, form);
      if (roots.insert(r).second) todo.push_back(r);
    }
  }
  return roots;
}

FiniteRootSystem from_cartan(const std::string& label, const std::vector<std::vector<Rational>>& gram) {
  int n = static_cast<int>(gram.size());
  QMatrix form(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form(i, j) = gram[i][j];
  std::vector<Weight> simple;
  for (int i = 0; i < n; ++i) simple.push_back(unit(n, i));
  return FiniteRootSystem(label, form, closure(simple, form), simple);
}

// Gram matrix (1/2)*Cartan for a simply laced diagram given by its edges.
std::vector<std::vector<Rational>> simply_laced(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) g[i][i] = 1;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = make_rational(-1, 2);
  return g;
}

}  // namespace

FiniteRootSystem build_finite_root_system(RootType type, int n) {
  std::string label = to_string(type) + std::to_string(n);
  auto bad = [&]() { return std::invalid_argument("invalid rank " + std::to_string(n) + " for type " + to_string(type)); };
  std::set<Weight> roots;
  std::vector<Weight> simple;
  switch (type) {
    case RootType::A: {
      if (n < 1) throw bad();
      int m = n + 1;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i != j) roots.insert(pm(m, i, 1, j, -1));
      for (int i = 0; i < n; ++i) simple.push_back(pm(m, i, 1, i + 1, -1));
      return FiniteRootSystem(label, scalar_form(m, make_rational(1, 2)), roots, simple);
    }
    case RootType::B:
    case RootType::C:
    case RootType::BC: {
      if (n < 1 || (type != RootType::BC && n < 2)) throw bad();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int a : {1, -1})
            for (int b : {1, -1}) roots.insert(pm(n, i, a, j, b));
      for (int i = 0; i < n; ++i)
        for (int a : {1, -1}) {
          if (type != RootType::C) roots.insert(unit(n, i, a));
          if (type != RootType::B) roots.insert(unit(n, i, 2 * a));
        }
      for (int i = 0; i + 1 < n; ++i) simple.push_back(pm(n, i, 1, i + 1, -1));
      simple.push_back(unit(n, n - 1, type == RootType::C ? 2 : 1));
      Rational c = type == RootType::C ? make_rational(1, 2) : Rational(1);
      return FiniteRootSystem(label, scalar_form(n, c), roots, simple);
    }
    case RootType::D: {
      if (n < 4) throw bad();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int a : {1, -1})
            for (int b : {1, -1}) roots.insert(pm(n, i, a, j, b));
      for (int i = 0; i + 1 < n; ++i) simple.push_back(pm(n, i, 1, i + 1, -1));
      simple.push_back(pm(n, n - 2, 1, n - 1, 1));
      return FiniteRootSystem(label, scalar_form(n, make_rational(1, 2)), roots, simple);
    }
    case RootType::G: {
      if (n != 2) throw bad();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          roots.insert(pm(3, i, 1, j, -1));
          Weight l(3, -1);
          l[i] = 2;
          roots.insert(l);
          for (auto& x : l) x = -x;
          roots.insert(l);
        }
      simple = {pm(3, 0, 1, 1, -1), Weight{-2, 1, 1}};
      return FiniteRootSystem(label, scalar_form(3, make_rational(1, 2)), roots, simple);
    }
    case RootType::F: {
      if (n != 4) throw bad();
      Rational h = make_rational(-1, 2);
      return from_cartan(label, {{Rational(2), Rational(-1), Rational(0), Rational(0)},
                                 {Rational(-1), Rational(2), Rational(-1), Rational(0)},
                                 {Rational(0), Rational(-1), Rational(1), h},
                                 {Rational(0), Rational(0), h, Rational(1)}});
    }
    case RootType::E: {
      if (n < 6 || n > 8) throw bad();
      // Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4.
      std::vector<std::pair<int, int>> edges{{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 5; i < n; ++i) edges.emplace_back(i - 1, i);
      return from_cartan(label, simply_laced(n, edges));
    }
  }
  throw bad();
}

RootString root_string(const Weight& beta, const Weight& alpha, const QMatrix& form,
                       const std::function<bool(const Weight&)>& member, int range) {
  RootString out;
  Rational aa = form_inner(form, alpha, alpha);
  if (sgn(aa) == 0) throw std::invalid_argument("root string along an isotropic root");
  out.cartan = 2 * form_inner(form, beta, alpha) / aa;
  auto at = [&](int n) {
    Weight w = beta;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += n * alpha[i];
    return member(w);
  };
  if (!at(0)) {
    out.ok = false;
    out.problem = "beta is not a root";
    return out;
  }
  while (out.d < range && at(-(out.d + 1))) ++out.d;
  while (out.u < range && at(out.u + 1)) ++out.u;
  for (int n = -range; n <= range; ++n) {
    if (n >= -out.d && n <= out.u) continue;
    if (at(n)) {
      out.ok = false;
      out.problem = "string broken at n = " + std::to_string(n);
      return out;
    }
  }
  if (out.d == range || out.u == range) {
    out.ok = false;
    out.problem = "string reaches the scan bound";
  } else if (Rational(out.d - out.u) != out.cartan) {
    out.ok = false;
    out.problem = "d - u differs from the Cartan number";
  } else if (abs(out.cartan) > 4) {
    out.ok = false;
    out.problem = "Cartan number exceeds 4 in absolute value";
  }
  return out;
}

bool is_finite_root_system(const std::set<Weight>& roots, const QMatrix& form, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!roots.count(Weight(form.rows(), 0))) return fail("0 missing");
  for (const auto& a : roots) {
    Weight neg = a;
    for (auto& x : neg) x = -x;
    if (!roots.count(neg)) return fail("not closed under negation");
    if (sgn(form_inner(form, a, a)) == 0) {
      if (std::any_of(a.begin(), a.end(), [](int x) { return x != 0; })) return fail("isotropic nonzero root");
      continue;
    }
    for (const auto& b : roots) {
      Rational c = 2 * form_inner(form, b, a) / form_inner(form, a, a);
      if (c.get_den() != 1) return fail("non-integral Cartan number");
      if (!roots.count(reflect(a, b, form))) return fail("not closed under reflections");
    }
  }
  return true;
}

}  // namespace ealie
