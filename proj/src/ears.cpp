#include "ealie/ears.hpp"

#include "ealie/finroot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ealie {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::WindowVerified: return "window-verified";
  }
  return "?";
}

bool AxiomReport::passed() const {
  for (const auto& v : verdicts)
    if (v.required && !v.ok()) return false;
  return true;
}

const Verdict* AxiomReport::find(const std::string& axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string lattice_str(const Lattice& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

Weight flatten(const Root& r) {
  Weight w = r.finite;
  w.insert(w.end(), r.lattice.begin(), r.lattice.end());
  return w;
}

Root unflatten(const Weight& w, int ell) {
  return Root{Weight(w.begin(), w.begin() + ell), Weight(w.begin() + ell, w.end())};
}

Vec as_vec(const Root& r) {
  Vec v;
  Weight w = flatten(r);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) v.add_term({static_cast<int>(i)}, Rational(w[i]));
  return v;
}

QMatrix full_form(const RootData& r) {
  QMatrix m(r.ell + r.nu, r.ell + r.nu);
  for (int i = 0; i < r.ell; ++i)
    for (int j = 0; j < r.ell; ++j) m(i, j) = r.finite_form(i, j);
  return m;
}

bool is_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool lex_positive(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

Rational RootData::inner(const Root& a, const Root& b) const {
  return form_inner(finite_form, a.finite, b.finite);
}

std::vector<Root> RootData::non_isotropic() const {
  std::vector<Root> out;
  for (const auto& r : roots)
    if (!isotropic(r)) out.push_back(r);
  return out;
}

std::vector<Root> RootData::isotropic_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots)
    if (isotropic(r)) out.push_back(r);
  return out;
}

std::set<std::vector<int>> RootData::finite_image() const {
  std::set<std::vector<int>> out;
  for (const auto& r : roots)
    if (!isotropic(r)) out.insert(r.finite);
  return out;
}

RootData root_data(const RootSystemWindow& win) {
  RootData d;
  d.ell = win.ell();
  d.nu = win.nu();
  d.window = win.window();
  d.finite_form = win.finite_form();
  d.roots = win.roots();
  d.member = [&win](const Root& r) -> std::optional<bool> { return win.is_root(r); };
  return d;
}

RootData root_data_from_set(int ell, int nu, QMatrix finite_form, const std::set<Root>& roots, int window) {
  RootData d;
  d.ell = ell;
  d.nu = nu;
  d.window = window;
  d.finite_form = std::move(finite_form);
  for (const auto& r : roots)
    if (lattice_sup_norm(r.lattice) <= window) d.roots.push_back(r);
  auto members = std::make_shared<std::set<Root>>(roots);
  d.member = [members, window](const Root& r) -> std::optional<bool> {
    if (lattice_sup_norm(r.lattice) > window) return std::nullopt;
    return members->count(r) > 0;
  };
  return d;
}

std::vector<std::vector<int>> simple_system(const std::set<std::vector<int>>& roots) {
  std::vector<std::vector<int>> positive;
  for (const auto& r : roots)
    if (lex_positive(r)) positive.push_back(r);
  std::set<std::vector<int>> sums;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i; j < positive.size(); ++j) sums.insert(add(positive[i], positive[j]));
  std::vector<std::vector<int>> out;
  for (const auto& p : positive)
    if (!sums.count(p)) out.push_back(p);
  return out;
}

int isotropic_rank(const RootData& r) {
  IntLattice lat(r.nu);
  for (const auto& d : r.isotropic_roots()) lat.add(d.lattice);
  return static_cast<int>(lat.rank());
}

Verdict check_semilattice(const std::set<Lattice>& s, int nu, int window) {
  Verdict v{"semilattice", Status::Pass, "0 in S, S + 2S in S, S = -S, full rank", "", true};
  auto fail = [&v](std::string w) {
    v.status = Status::Fail;
    v.witness = std::move(w);
    return v;
  };
  if (!s.count(Lattice(nu, 0))) return fail("0 not in S");
  for (const auto& a : s) {
    Lattice c = lattice_add(a, lattice_add(a, a));
    if (lattice_sup_norm(c) <= window && !s.count(c))
      return fail(lattice_str(a) + " + 2" + lattice_str(a) + " = " + lattice_str(c) + " not in S");
  }
  for (const auto& a : s)
    for (const auto& b : s) {
      Lattice c = lattice_add(a, lattice_add(b, b));
      if (lattice_sup_norm(c) <= window && !s.count(c))
        return fail(lattice_str(a) + " + 2" + lattice_str(b) + " = " + lattice_str(c) + " not in S");
    }
  for (const auto& a : s)
    if (!s.count(lattice_neg(a))) return fail("-" + lattice_str(a) + " not in S");
  IntLattice lat(nu);
  for (const auto& a : s) lat.add(a);
  if (static_cast<int>(lat.rank()) != nu) return fail("span has rank " + std::to_string(lat.rank()));
  if (window >= 0) v.detail += " (window " + std::to_string(window) + ")";
  return v;
}

SupportSets support_sets(const RootData& r) {
  SupportSets out;
  auto image = r.finite_image();
  if (image.empty()) {
    out.problem = "no non-isotropic roots in the window";
    return out;
  }
  Lattice origin(r.nu, 0);
  auto box = lattice_box(r.nu, r.window);
  auto member = [&](const std::vector<int>& f, const Lattice& d) {
    auto m = r.member(Root{f, d});
    return m.value_or(false);
  };
  std::vector<std::vector<int>> sh, lg, ex;
  std::set<Rational> norms;
  for (const auto& a : image) {
    std::vector<int> half(a.size());
    bool halvable = std::all_of(a.begin(), a.end(), [](int x) { return x % 2 == 0; });
    if (halvable) {
      for (std::size_t i = 0; i < a.size(); ++i) half[i] = a[i] / 2;
      if (image.count(half)) {
        ex.push_back(a);
        continue;
      }
    }
    norms.insert(r.norm(Root{a, origin}));
  }
  for (const auto& a : image) {
    if (std::find(ex.begin(), ex.end(), a) != ex.end()) continue;
    Rational n = r.norm(Root{a, origin});
    (n == *norms.begin() ? sh : lg).push_back(a);
  }
  auto support = [&](const std::vector<std::vector<int>>& group) {
    std::set<Lattice> s;
    for (const auto& d : box)
      if (std::all_of(group.begin(), group.end(), [&](const auto& a) { return member(a, d); })) s.insert(d);
    return s;
  };
  out.S = support(sh);
  if (!lg.empty()) out.L = support(lg);
  if (!ex.empty()) out.E = support(ex);
  for (const auto& a : image)
    for (const auto& d : box)
      if (member(a, d)) out.per_root[a].insert(d);

  // (q4): every root is isotropic with zero finite part, or a + d for exactly one a.
  out.partition_ok = true;
  std::set<Root> present(r.roots.begin(), r.roots.end());
  for (const auto& x : r.roots) {
    bool iso = r.isotropic(x);
    if (iso != is_zero(x.finite)) {
      out.partition_ok = false;
      out.problem = "isotropy and zero finite part disagree at " + str(x);
      break;
    }
    if (!iso && !out.per_root[x.finite].count(x.lattice)) {
      out.partition_ok = false;
      out.problem = "root " + str(x) + " missing from its translate";
      break;
    }
  }
  for (const auto& [a, ds] : out.per_root)
    for (const auto& d : ds)
      if (!present.count(Root{a, d})) {
        out.partition_ok = false;
        out.problem = "translate point " + str(Root{a, d}) + " not listed";
      }

  out.containment_ok = true;
  std::vector<int> zero(r.ell, 0);
  for (const auto& [a, ds] : out.per_root)
    for (const auto& d : ds)
      if (!member(zero, d)) {
        out.containment_ok = false;
        out.problem = "S_a contains " + lattice_str(d) + " outside R^0";
      }

  // radical of the form on span(R) against span(R^0)
  std::vector<Vec> all, iso;
  for (const auto& x : r.roots) {
    all.push_back(as_vec(x));
    if (r.isotropic(x)) iso.push_back(as_vec(x));
  }
  auto basis = span_basis(all);
  QMatrix form = full_form(r);
  QMatrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Rational s(0);
      for (const auto& [ki, ci] : basis[i].terms())
        for (const auto& [kj, cj] : basis[j].terms()) s += ci * cj * form(ki[0], kj[0]);
      gram(i, j) = s;
    }
  std::size_t radical = basis.size() - gram.rank();
  out.span_ok = span_rank(iso) == radical;
  if (!out.span_ok) {
    out.problem = "span of R^0 has dimension " + std::to_string(span_rank(iso)) + ", radical " +
                  std::to_string(radical);
  }
  return out;
}

AxiomReport check_ears_axioms(const RootData& r, int string_range) {
  AxiomReport rep;
  rep.suite = "EARS";
  rep.meta["window"] = std::to_string(r.window);
  std::string win = "lattice parts within window " + std::to_string(r.window);
  auto non_iso = r.non_isotropic();
  auto iso = r.isotropic_roots();

  {
    Verdict v{"R1", Status::WindowVerified, "-R = R for " + win, "", true};
    for (const auto& x : r.roots)
      if (r.member(-x) != std::optional<bool>(true)) {
        v.status = Status::Fail;
        v.witness = str(x) + " in R but not its negative";
        break;
      }
    rep.add(v);
  }
  {
    std::vector<Vec> vecs;
    for (const auto& x : r.roots) vecs.push_back(as_vec(x));
    std::size_t rank = span_rank(vecs);
    Verdict v{"R2", Status::Pass, "span rank " + std::to_string(rank) + " of " + std::to_string(r.ell + r.nu), "",
              true};
    if (static_cast<int>(rank) != r.ell + r.nu) {
      v.status = Status::Fail;
      v.witness = "roots span a subspace of dimension " + std::to_string(rank);
    }
    rep.add(v);
  }
  auto image = r.finite_image();
  std::set<std::vector<int>> with_zero = image;
  with_zero.insert(std::vector<int>(r.ell, 0));
  {
    std::string why;
    Verdict v{"finite-image", Status::Pass, "finite parts of R^x form a finite root system", "", true};
    if (!is_finite_root_system(with_zero, r.finite_form, &why)) {
      v.status = Status::Fail;
      v.witness = why;
    }
    rep.add(v);
  }
  {
    // R in the Z-span of a Z-basis of <R^0> and preimages of a base.
    IntLattice lat(r.ell + r.nu);
    for (const auto& d : iso) lat.add(flatten(d));
    auto base = simple_system(image);
    for (const auto& a : base)
      for (const auto& x : non_iso)
        if (x.finite == a) {
          lat.add(flatten(x));
          break;
        }
    Verdict v{"R3", Status::Pass,
              "R in the Z-span of " + std::to_string(base.size()) + " simple preimages and <R^0>", "", true};
    for (const auto& x : r.roots)
      if (!lat.contains(flatten(x))) {
        v.status = Status::Fail;
        v.witness = str(x) + " outside the integral lattice";
        break;
      }
    rep.add(v);
  }
  {
    QMatrix form = full_form(r);
    std::size_t tested = 0, skipped = 0;
    Verdict v{"R4", Status::WindowVerified, "", "", true};
    for (const auto& a : non_iso) {
      for (const auto& b : r.roots) {
        bool decided = true;
        for (int n = -string_range; n <= string_range && decided; ++n)
          decided = r.member(b + n * a).has_value();
        if (!decided) {
          ++skipped;
          continue;
        }
        ++tested;
        auto s = root_string(
            flatten(b), flatten(a), form, [&](const Weight& w) { return *r.member(unflatten(w, r.ell)); },
            string_range);
        if (!s.ok) {
          v.status = Status::Fail;
          v.witness = "beta " + str(b) + ", alpha " + str(a) + ": " + s.problem;
          break;
        }
      }
      if (v.status == Status::Fail) break;
    }
    v.detail = std::to_string(tested) + " pairs with " + win + ", strings scanned to |n| <= " +
               std::to_string(string_range) + ", " + std::to_string(skipped) + " undecidable pairs skipped";
    rep.meta["R4_pairs"] = std::to_string(tested);
    rep.add(v);
  }
  {
    std::vector<std::vector<int>> nodes(image.begin(), image.end());
    std::vector<int> comp(nodes.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int i) { return comp[i] == i ? i : comp[i] = find(comp[i]); };
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
        if (sgn(form_inner(r.finite_form, nodes[i], nodes[j])) != 0) comp[find(i)] = find(j);
    Verdict v{"R5a", Status::Pass, "non-orthogonality graph on the finite image of R^x is connected", "", true};
    for (std::size_t i = 1; i < nodes.size(); ++i)
      if (find(i) != find(0)) {
        v.status = Status::Fail;
        v.witness = "components containing " + str(Root{nodes[0], {}}) + " and " + str(Root{nodes[i], {}});
        break;
      }
    if (nodes.empty()) {
      v.status = Status::Fail;
      v.witness = "R^x is empty";
    }
    rep.add(v);
  }
  {
    Verdict v{"R5b", Status::WindowVerified, "witness alpha for every isotropic root with " + win, "", true};
    for (const auto& d : iso) {
      bool found = false;
      for (const auto& a : non_iso)
        if (r.member(a + d) == std::optional<bool>(true)) {
          found = true;
          break;
        }
      if (!found) {
        v.status = Status::Fail;
        v.witness = "no alpha with alpha + " + str(d) + " in R";
        break;
      }
    }
    rep.add(v);
  }
  {
    Verdict v{"R6", Status::Pass, "reduced", "", false};
    for (const auto& a : non_iso)
      if (r.member(2 * a) == std::optional<bool>(true)) {
        v.status = Status::Fail;
        v.detail = "not reduced";
        v.witness = "2" + str(a) + " in R";
        break;
      }
    rep.meta["reduced"] = v.status == Status::Pass ? "true" : "false";
    rep.add(v);
  }
  {
    auto sets = support_sets(r);
    Verdict v = check_semilattice(sets.S, r.nu, r.window);
    v.axiom = "S-semilattice";
    rep.add(v);
    Verdict q{"support", Status::Pass, "partition of R, S_a in R^0, span(R^0) is the radical", "", true};
    if (!sets.partition_ok || !sets.containment_ok || !sets.span_ok) {
      q.status = Status::Fail;
      q.witness = sets.problem;
    }
    rep.add(q);
  }
  return rep;
}

}  // namespace ealie
