#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ealie/constructions.hpp"
#include "ealie/decomp.hpp"
#include "ealie/finroot.hpp"
#include "gen.hpp"

#include <set>

using namespace ealie;

namespace {

AlgebraPtr sp4() { return std::make_shared<ClassicalAlgebra>("C", 2); }

std::shared_ptr<AffinizedAlgebra> affine_example(int ell = 2) {
  auto g = std::make_shared<SkewTorusAlgebra>(ell, SignMatrix(2, {-1}), true);
  return std::make_shared<AffinizedAlgebra>(g);
}

Vec e(int p, int r) { return Vec::unit({p - 1, r - 1, 1}); }

Root root(std::vector<int> f, Lattice s = {}) { return Root{std::move(f), std::move(s)}; }

// Toral element that is not diagonal on the matrix units.
class SkewedToral : public ClassicalAlgebra {
 public:
  SkewedToral() : ClassicalAlgebra("C", 2) {}
  ToralBasis toral() const override {
    ToralBasis h = ClassicalAlgebra::toral();
    h.elements[0] += e(1, 2) - e(4, 3);
    return h;
  }
};

}  // namespace

TEST_CASE("sp4 decomposes into the C2 root system") {
  RootSystemWindow win(sp4(), 0);
  auto c2 = build_finite_root_system(RootType::C, 2);
  CHECK(win.roots().size() == 9);
  std::set<std::vector<int>> finite;
  for (const auto& r : win.roots()) {
    finite.insert(r.finite);
    CHECK(win.space(r).size() == (r.finite_is_zero() ? 2u : 1u));
  }
  std::set<std::vector<int>> expected;
  for (const auto& w : c2.nonzero_roots()) expected.insert(std::vector<int>(w.begin(), w.end()));
  expected.insert({0, 0});
  CHECK(finite == expected);
  // epsilon-coordinate form: short roots norm 1
  CHECK(win.norm(root({1, -1})) == 1);
  CHECK(win.norm(root({2, 0})) == 2);
}

TEST_CASE("affinized quantum-torus example: dimensions on the window") {
  RootSystemWindow win(affine_example(), 2);
  CHECK(win.roots().size() == 8 * 25 + 25);
  for (const auto& sigma : lattice_box(2, 2)) {
    for (auto f : std::vector<std::vector<int>>{{1, -1}, {-1, 1}, {1, 1}, {-1, -1}})
      CHECK(win.space(root(f, sigma)).size() == 2);
    for (auto f : std::vector<std::vector<int>>{{2, 0}, {-2, 0}, {0, 2}, {0, -2}})
      CHECK(win.space(root(f, sigma)).size() == 1);
    CHECK(win.is_root(root({0, 0}, sigma)));
    CHECK(win.norm(root({0, 0}, sigma)) == 0);
  }
  CHECK(win.isotropic_roots().size() == 25);
}

TEST_CASE("window invariants") {
  RootSystemWindow win(affine_example(), 1);
  for (const auto& a : win.roots()) {
    CHECK(win.is_root(-a));
    CHECK(win.space(a).size() == win.space(-a).size());
    CHECK(sgn(win.norm(a)) >= 0);
    CHECK((sgn(win.norm(a)) == 0) == a.finite_is_zero());
    for (const auto& d : win.isotropic_roots()) CHECK(win.inner(a, d) == 0);
  }
  gen::Rng rng(7);
  const auto& roots = win.roots();
  for (int k = 0; k < 300; ++k) {
    const Root& a = roots[gen::integer(rng, 0, static_cast<int>(roots.size()) - 1)];
    const Root& b = roots[gen::integer(rng, 0, static_cast<int>(roots.size()) - 1)];
    if (a + b == Root{std::vector<int>(2, 0), Lattice(2, 0)}) continue;
    for (const auto& x : win.space(a))
      for (const auto& y : win.space(b)) CHECK(win.algebra().form(x, y) == 0);
  }
}

TEST_CASE("t_alpha representatives") {
  RootSystemWindow win(sp4(), 0);
  const auto& h = win.toral().elements;
  CHECK(rep_t_alpha(win, root({1, 0})) == h[0] * Rational(1, 2));
  CHECK(rep_t_alpha(win, root({0, 0})).is_zero());
  CHECK(rep_t_alpha(win, root({1, 1})) == rep_t_alpha(win, root({1, 0})) + rep_t_alpha(win, root({0, 1})));

  auto aff = affine_example();
  RootSystemWindow awin(aff, 1);
  CHECK(rep_t_alpha(awin, root({0, 0}, {1, 0})) == aff->central(0));
  CHECK(rep_t_alpha(awin, root({0, 0}, {0, 1})) == aff->central(1));
  CHECK(rep_t_alpha(awin, root({1, 0}, {0, 0})) == aff->lift(aff->base()->toral().elements[0]) * Rational(1, 2));
}

TEST_CASE("degenerate toral Gram matrix is reported") {
  ExtensionSpec spec;
  spec.base = sp4();
  spec.e_dim = 1;
  spec.e_form = QMatrix(1, 1);
  spec.e_toral = {0};
  RootSystemWindow win(std::make_shared<ExtensionAlgebra>(spec), 0);
  CHECK_FALSE(win.gram_nonsingular());
  CHECK_THROWS_AS(rep_t_alpha(win, root({1, 0})), std::domain_error);
  RootSystemWindow ok(direct_sum_with_abelian(sp4(), 1), 0);
  CHECK(ok.gram_nonsingular());
}

TEST_CASE("sl2 search") {
  RootSystemWindow win(sp4(), 0);
  Root a = root({1, -1});
  Vec x = e(1, 2) - e(4, 3);
  auto t = sl2_search(win, x, a);
  REQUIRE(t);
  CHECK(t->y == (e(2, 1) - e(3, 4)) * Rational(1, 2));
  CHECK(t->xy_form == 1);
  CHECK(is_sl2_triple(win.algebra(), *t));
  auto scaled = sl2_search(win, x * Rational(3), a);
  REQUIRE(scaled);
  CHECK(scaled->y == t->y * Rational(1, 3));

  RootSystemWindow awin(affine_example(), 1);
  for (const auto& r : awin.non_isotropic_roots())
    for (const auto& b : awin.space(r)) {
      auto tr = sl2_search(awin, b, r);
      REQUIRE(tr);
      CHECK(is_sl2_triple(awin.algebra(), *tr));
      CHECK(tr->xy_form == 1);
    }
}

TEST_CASE("isotropic pairs use the central term") {
  auto aff = affine_example();
  RootSystemWindow win(aff, 1);
  for (const auto& d : win.isotropic_roots()) {
    auto p = isotropic_pair_search(win, d);
    REQUIRE(p);
    CHECK(win.algebra().bracket(p->first, p->second) == rep_t_alpha(win, d));
  }
}

TEST_CASE("theta automorphisms") {
  RootSystemWindow win(sp4(), 0);
  const auto& h = win.toral().elements;
  Root a = root({1, -1});
  CHECK(theta_automorphism(win, a, 1, h[0]) == h[1]);
  Vec ta = rep_t_alpha(win, a);
  CHECK(theta_automorphism(win, a, 1, ta) == -ta);
  CHECK(theta_automorphism(win, a, 3, ta) == -ta);
  std::vector<Vec> image;
  for (const auto& x : win.space(a)) image.push_back(theta_automorphism(win, a, 1, x));
  CHECK(same_span(image, win.space(-a)));
  // L_beta -> L_{w_alpha(beta)}
  Root b = root({2, 0});
  image.clear();
  for (const auto& x : win.space(b)) image.push_back(theta_automorphism(win, a, 2, x));
  CHECK(same_span(image, win.space(root({0, 2}))));
}

TEST_CASE("exp_ad rejects non-nilpotent actions") {
  RootSystemWindow win(sp4(), 0);
  const auto& h = win.toral().elements;
  CHECK_THROWS_AS(exp_ad(win.algebra(), h[0], e(1, 2) - e(4, 3), 1, 5), std::runtime_error);
}

TEST_CASE("non-diagonal toral action names the basis element") {
  try {
    RootSystemWindow win(std::make_shared<SkewedToral>(), 0);
    FAIL("expected NonDiagonalAction");
  } catch (const NonDiagonalAction& err) {
    CHECK(std::string(err.what()).find("diagonally") != std::string::npos);
  }
}

TEST_CASE("core and center of sp4") {
  RootSystemWindow win(sp4(), 0);
  auto cc = core_and_center_window(win);
  CHECK(cc.core.at({}).size() == 10);
  CHECK(cc.center.empty());
  CHECK(cc.h_alpha_sum_is_h_perp);
  CHECK(cc.h_perp.empty());
}

TEST_CASE("core and center of the affinized example") {
  auto aff = affine_example();
  RootSystemWindow win(aff, 2);
  auto cc = core_and_center_window(win);
  for (const auto& sigma : lattice_box(2, 2)) {
    std::vector<Vec> expected;
    for (const auto& b : aff->base()->homogeneous_basis(sigma)) expected.push_back(aff->lift(b));
    if (lattice_is_zero(sigma)) {
      expected.push_back(aff->central(0));
      expected.push_back(aff->central(1));
    }
    CHECK(same_span(cc.core.at(sigma), expected));
  }
  CHECK(same_span(cc.center, {aff->central(0), aff->central(1)}));
  for (const auto& z : cc.center) CHECK(aff->degree_of(z) == Lattice{0, 0});
  CHECK(cc.h_alpha_sum_is_h_perp);
  // L_0 = G_0^0 + C + D with G_0^0 of dimension 3, so H^perp is one-dimensional
  CHECK(cc.h_perp.size() == 1);
  CHECK_FALSE(span_contains(cc.h_perp, {aff->central(0)}));
}
