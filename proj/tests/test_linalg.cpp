#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ealie/linalg.hpp"
#include "gen.hpp"

using namespace ealie;

namespace {

Vec vec3(int a, int b, int c) {
  Vec v;
  v.add_term({0}, Rational(a));
  v.add_term({1}, Rational(b));
  v.add_term({2}, Rational(c));
  return v;
}

Vec random_vec(gen::Rng& rng, int keys) {
  Vec v;
  for (int k = 0; k < keys; ++k)
    if (gen::integer(rng, 0, 2) != 0) v.add_term({k}, gen::rational(rng));
  return v;
}

}  // namespace

TEST_CASE("sparse vectors drop zero coefficients") {
  Vec v = vec3(1, 0, 2);
  CHECK(v.size() == 2);
  v.add_term({2}, Rational(-2));
  CHECK(v.size() == 1);
  CHECK((v - v).is_zero());
  CHECK(v * Rational(0) == Vec());
}

TEST_CASE("echelon rank, membership and relations") {
  Echelon e;
  CHECK(e.insert(vec3(1, 2, 3)));
  CHECK(e.insert(vec3(0, 1, 1)));
  CHECK_FALSE(e.insert(vec3(2, 5, 7)));  // = 2*v0 + v1
  CHECK(e.rank() == 2);
  REQUIRE(e.relations().size() == 1);
  const auto& rel = e.relations()[0];
  CHECK(rel[0] == -2);
  CHECK(rel[1] == -1);
  CHECK(rel[2] == 1);
  auto c = e.express(vec3(1, 3, 4));
  REQUIRE(c.has_value());
  CHECK(combine({vec3(1, 2, 3), vec3(0, 1, 1), vec3(2, 5, 7)}, *c) == vec3(1, 3, 4));
  CHECK_FALSE(e.express(vec3(0, 0, 1)).has_value());
}

TEST_CASE("echelon basis is canonical") {
  gen::Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    std::vector<Vec> a;
    for (int j = 0; j < 4; ++j) a.push_back(random_vec(rng, 6));
    // b spans the same space through invertible recombination
    std::vector<Vec> b;
    for (std::size_t j = 0; j < a.size(); ++j) b.push_back(a[j] + a[(j + 1) % a.size()] * Rational(2));
    CHECK(span_contains(a, b));
    if (span_rank(b) == span_rank(a)) CHECK(same_span(a, b));
  }
}

TEST_CASE("kernel of images") {
  std::vector<Vec> imgs{vec3(1, 0, 0), vec3(0, 1, 0), vec3(1, 1, 0), vec3(0, 0, 0)};
  auto ker = kernel_of_images(imgs);
  CHECK(ker.size() == 2);
  for (const auto& k : ker) CHECK(combine(imgs, k).is_zero());
  auto sol = solve_combination(imgs, vec3(2, 3, 0));
  REQUIRE(sol.has_value());
  CHECK(combine(imgs, *sol) == vec3(2, 3, 0));
}

TEST_CASE("dense matrices") {
  QMatrix m(3, 3);
  int vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(m.determinant() == 4);  // A_3 Cartan matrix
  CHECK(m.rank() == 3);
  CHECK(m.is_symmetric());
  CHECK(m.positive_definite());
  auto minors = m.leading_principal_minors();
  CHECK(minors == std::vector<Rational>{Rational(2), Rational(3), Rational(4)});
  auto x = m.solve({Rational(1), Rational(0), Rational(0)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == make_rational(3, 4));

  QMatrix s(2, 3);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(s.rank() == 1);
  CHECK(s.kernel().size() == 2);
  QMatrix n(2, 2);
  n(0, 0) = 1;
  n(1, 1) = -1;
  CHECK_FALSE(n.positive_definite());
}

TEST_CASE("random matrices: det multiplicative, solve consistent") {
  gen::Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    QMatrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = gen::rational(rng, 4);
        b(i, j) = gen::rational(rng, 4);
      }
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
    CHECK(a.transpose().determinant() == a.determinant());
    if (sgn(a.determinant()) != 0) {
      std::vector<Rational> rhs{gen::rational(rng), gen::rational(rng), gen::rational(rng)};
      auto x = a.solve(rhs);
      REQUIRE(x.has_value());
      for (int i = 0; i < 3; ++i) {
        Rational s = 0;
        for (int j = 0; j < 3; ++j) s += a(i, j) * (*x)[j];
        CHECK(s == rhs[i]);
      }
    }
  }
}

TEST_CASE("integer lattices") {
  auto l = IntLattice::generated_by(2, {{2, 0}, {0, 2}, {1, 1}});
  CHECK(l.rank() == 2);
  CHECK(l.contains({1, 1}));
  CHECK(l.contains({3, 1}));
  CHECK_FALSE(l.contains({1, 0}));
  auto m = IntLattice::generated_by(3, {{2, 4, 6}, {3, 6, 9}});
  CHECK(m.rank() == 1);
  CHECK(m.contains({1, 2, 3}));
  CHECK_FALSE(m.contains({1, 2, 4}));
  auto z = IntLattice::generated_by(2, {});
  CHECK(z.rank() == 0);
  CHECK(z.contains({0, 0}));
}
