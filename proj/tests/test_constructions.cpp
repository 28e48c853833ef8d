#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ealie/axioms.hpp"
#include "ealie/constructions.hpp"
#include "gen.hpp"

using namespace ealie;

namespace {

std::shared_ptr<SkewTorusAlgebra> torus_g(int ell = 2) {
  return std::make_shared<SkewTorusAlgebra>(ell, SignMatrix(2, {-1}), true);
}

Vec random_homogeneous(gen::Rng& rng, const LieAlgebra& alg, int w) {
  Lattice s = gen::lattice(rng, alg.grading_rank(), w);
  auto basis = alg.homogeneous_basis(s);
  Vec v;
  for (const auto& b : basis) v.axpy(gen::rational(rng, 4), b);
  return v;
}

Vec jacobi(const LieAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return a.bracket(x, a.bracket(y, z)) + a.bracket(y, a.bracket(z, x)) + a.bracket(z, a.bracket(x, y));
}

// Constant form, so it pairs every pair of degrees.
class FlatForm : public SkewTorusAlgebra {
 public:
  FlatForm() : SkewTorusAlgebra(2, SignMatrix(2, {-1}), true) {}
  Rational form(const Vec&, const Vec&) const override { return 1; }
};

Vec h1_of_sp4() { return Vec::unit({0, 0, 1}) - Vec::unit({2, 2, 1}); }

}  // namespace

TEST_CASE("affinization brackets") {
  auto g = torus_g();
  auto aff = affinize(g);
  gen::Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    Lattice s = gen::lattice(rng, 2, 2);
    auto basis = g->homogeneous_basis(s);
    const Vec& x = basis[gen::integer(rng, 0, static_cast<int>(basis.size()) - 1)];
    for (int i = 0; i < 2; ++i) {
      CHECK(aff->bracket(aff->derivation(i), aff->lift(x)) == aff->lift(x) * Rational(s[i]));
      CHECK(aff->bracket(aff->central(i), aff->lift(x)).is_zero());
    }
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(aff->form(aff->central(i), aff->derivation(j)) == (i == j ? 1 : 0));
      CHECK(aff->form(aff->central(i), aff->central(j)) == 0);
      CHECK(aff->form(aff->derivation(i), aff->derivation(j)) == 0);
      CHECK(aff->bracket(aff->derivation(i), aff->derivation(j)).is_zero());
    }
  // [x, y]' picks up sum_i (d_i x, y) c_i
  auto x = g->homogeneous_basis({1, 0});
  auto y = g->homogeneous_basis({-1, 0});
  bool seen = false;
  for (const auto& a : x)
    for (const auto& b : y) {
      Vec br = aff->bracket(aff->lift(a), aff->lift(b));
      CHECK(br.coeff({1, 0}) == g->form(a, b));
      CHECK(br.coeff({1, 1}) == 0);
      CHECK(aff->project(br) == g->bracket(a, b));
      seen = seen || sgn(g->form(a, b)) != 0;
    }
  CHECK(seen);
}

TEST_CASE("affinization rejects bad input") {
  CHECK_THROWS_AS(affinize(std::make_shared<FlatForm>()), GradingViolation);
  auto aff = affinize(torus_g());
  CHECK_THROWS_AS(AffinizedAlgebra{aff}, std::invalid_argument);
}

TEST_CASE("Jacobi on the affinization, including C and D") {
  auto aff = affinize(torus_g());
  gen::Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    Vec v[3];
    for (auto& x : v) {
      x = random_homogeneous(rng, *aff, 2);
      x.axpy(gen::rational(rng, 3), aff->central(gen::integer(rng, 0, 1)));
      x.axpy(gen::rational(rng, 3), aff->derivation(gen::integer(rng, 0, 1)));
    }
    CHECK(jacobi(*aff, v[0], v[1], v[2]).is_zero());
    CHECK(aff->bracket(v[0], v[1]) == -aff->bracket(v[1], v[0]));
  }
}

TEST_CASE("extension conditions") {
  AlgebraPtr sp4 = std::make_shared<ClassicalAlgebra>("C", 2);
  const LieAlgebra& a = *sp4;

  ExtensionSpec inner;
  inner.base = sp4;
  inner.e_dim = 1;
  inner.e_form = QMatrix::identity(1);
  inner.rho = [&a](int, const Vec& x) { return a.bracket(h1_of_sp4(), x); };
  ExtensionAlgebra ok(inner);
  gen::Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    Vec x = random_homogeneous(rng, ok, 0), y = random_homogeneous(rng, ok, 0), z = random_homogeneous(rng, ok, 0);
    CHECK(jacobi(ok, x, y, z).is_zero());
  }
  CHECK(ok.bracket(ok.e(0), ok.lift(Vec::unit({0, 1, 1}))) == ok.lift(Vec::unit({0, 1, 1})));

  ExtensionSpec skew = inner;
  skew.e_dim = 2;
  skew.e_form = QMatrix::identity(2);
  skew.rho = nullptr;
  skew.tau = [](int, int) { return h1_of_sp4(); };
  try {
    ExtensionAlgebra bad(skew);
    FAIL("expected a violation");
  } catch (const ExtensionViolation& v) {
    CHECK(std::string(v.what()) == "tau is not antisymmetric");
    CHECK(v.witness == std::vector<int>{0, 0});
  }

  ExtensionSpec not_derivation = inner;
  not_derivation.rho = [](int, const Vec& x) { return x; };
  try {
    ExtensionAlgebra bad(not_derivation);
    FAIL("expected a violation");
  } catch (const ExtensionViolation& v) {
    CHECK(std::string(v.what()) == "rho(e_j) is not a derivation");
    CHECK(v.witness == std::vector<int>{0});
  }

  ExtensionSpec central = skew;
  central.tau = [](int j, int k) { return j == k ? Vec() : h1_of_sp4() * Rational(j < k ? 1 : -1); };
  try {
    ExtensionAlgebra bad(central);
    FAIL("expected a violation");
  } catch (const ExtensionViolation& v) {
    CHECK(v.witness == std::vector<int>{0, 1});
  }
}

TEST_CASE("direct sum with an abelian algebra") {
  auto sum = direct_sum_with_abelian(torus_g(), 2);
  CHECK(sum->homogeneous_basis({0, 0}).size() == torus_g()->homogeneous_basis({0, 0}).size() + 2);
  CHECK(sum->bracket(sum->e(0), sum->lift(torus_g()->homogeneous_basis({1, 1})[0])).is_zero());
  CHECK(sum->form(sum->e(1), sum->e(1)) == 1);
  CHECK(sum->toral().elements.size() == 4);
}

TEST_CASE("nullity-zero example over Q(sqrt 2, sqrt 3)") {
  auto ex = build_extension_example("C", 2, {2, 3});
  CHECK(ex->scalar_basis() == std::vector<std::uint64_t>{1, 2, 3, 6});
  RootSystemWindow win(ex, 0);
  CHECK(win.roots().size() == 9);
  for (const auto& r : win.non_isotropic_roots()) {
    CHECK(win.space(r).size() == 4);
    gen::Rng rng(r.finite[0] * 7 + r.finite[1] + 20);
    // x = e (x) c for a random nonzero c in the field
    Vec x = ex->tensor(win.space(r)[0], gen::sqrt_element(rng, ex->scalar_basis()));
    if (x.is_zero()) continue;
    auto t = sl2_search(win, x, r);
    REQUIRE(t);
    CHECK(win.algebra().bracket(t->e, t->y) == rep_t_alpha(win, r));
  }
  auto rep = check_T(win);
  for (const auto& v : rep.verdicts) CHECK_MESSAGE(v.ok(), v.axiom << ": " << v.witness);
  CHECK(rep.meta.at("nullity") == "0");
  CHECK(win.isotropic_roots().size() == 1);

  CHECK_THROWS_AS(build_extension_example("C", 2, {4}), std::invalid_argument);
  CHECK_THROWS_AS(build_extension_example("C", 2, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_extension_example("A", 2, {}), std::invalid_argument);
}

TEST_CASE("other classical types carry the right root systems") {
  for (auto [type, rank, roots] : std::vector<std::tuple<std::string, int, std::size_t>>{
           {"B", 2, 9}, {"B", 3, 19}, {"C", 3, 19}, {"D", 4, 25}}) {
    RootSystemWindow win(build_extension_example(type, rank, {}), 0);
    CHECK(win.roots().size() == roots);
    auto rep = check_T(win);
    CHECK_MESSAGE(rep.passed(), type << rank);
  }
}

TEST_CASE("degree derivation of a nu = 1 torus algebra gives a semidirect product") {
  auto g = std::make_shared<SkewTorusAlgebra>(2, SignMatrix::trivial(1), true);
  ExtensionSpec spec;
  spec.base = g;
  spec.e_dim = 1;
  spec.e_form = QMatrix(1, 1);
  spec.rho = [g](int, const Vec& x) {
    Vec out;
    for (const auto& [k, c] : x.terms()) out.add_term(k, c * g->degree_of_key(k)[0]);
    return out;
  };
  ExtensionAlgebra l(spec);
  gen::Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    Vec v[3];
    for (auto& x : v) {
      x = random_homogeneous(rng, l, 2);
      x.axpy(gen::rational(rng, 3), l.e(0));
    }
    CHECK(jacobi(l, v[0], v[1], v[2]).is_zero());
  }
  Vec x = l.lift(g->homogeneous_basis({2})[0]);
  CHECK(l.bracket(l.e(0), x) == x * Rational(2));
}
