#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ealie/finroot.hpp"

using namespace ealie;

TEST_CASE("type C2 in epsilon coordinates") {
  auto c2 = build_finite_root_system(RootType::C, 2);
  CHECK(c2.roots().size() == 9);
  for (const Weight& w : std::vector<Weight>{{0, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}})
    CHECK(c2.contains(w));
  CHECK(c2.norm({1, -1}) == 1);
  CHECK(c2.norm({2, 0}) == 2);  // 4 * 1/2
  CHECK(c2.short_roots().size() == 4);
  CHECK(c2.long_roots().size() == 4);
  CHECK(c2.extra_long_roots().empty());
  CHECK(c2.reduced().roots() == c2.roots());
  CHECK(c2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
}

TEST_CASE("one root length means all short") {
  auto a1 = build_finite_root_system(RootType::A, 1);
  CHECK(a1.roots().size() == 3);
  CHECK(a1.short_roots().size() == 2);
  CHECK(a1.long_roots().empty());
  CHECK(a1.norm({1, -1}) == 1);
}

TEST_CASE("root counts and axioms for every type") {
  struct Case {
    RootType t;
    int n;
    std::size_t count;
  };
  for (auto c : {Case{RootType::A, 3, 13}, Case{RootType::B, 3, 19}, Case{RootType::C, 3, 19},
                 Case{RootType::D, 4, 25}, Case{RootType::BC, 2, 13}, Case{RootType::G, 2, 13},
                 Case{RootType::F, 4, 49}, Case{RootType::E, 6, 73}, Case{RootType::E, 7, 127},
                 Case{RootType::E, 8, 241}}) {
    auto rs = build_finite_root_system(c.t, c.n);
    INFO(rs.label());
    CHECK(rs.roots().size() == c.count);
    std::string why;
    CHECK_MESSAGE(is_finite_root_system(rs.roots(), rs.form(), &why), why);
    Rational m = rs.norm(rs.short_roots().front());
    CHECK(m == 1);
    auto a = rs.cartan_matrix();
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i][i] == 2);
  }
  CHECK_THROWS_AS(build_finite_root_system(RootType::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_finite_root_system(RootType::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_finite_root_system(RootType::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_root_type("Z"), std::invalid_argument);
}

TEST_CASE("standard Cartan matrices") {
  CHECK(build_finite_root_system(RootType::G, 2).cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(build_finite_root_system(RootType::B, 2).cartan_matrix() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(build_finite_root_system(RootType::C, 3).cartan_matrix() ==
        std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
}

TEST_CASE("BC is non-reduced and reduces to B") {
  auto bc = build_finite_root_system(RootType::BC, 2);
  CHECK_FALSE(bc.is_reduced());
  CHECK(bc.extra_long_roots().size() == 4);
  CHECK(bc.reduced().roots() == build_finite_root_system(RootType::B, 2).roots());
}

TEST_CASE("reflections") {
  auto c2 = build_finite_root_system(RootType::C, 2);
  CHECK(reflect({1, -1}, {2, 0}, c2.form()) == Weight{0, 2});
  CHECK(reflect({1, -1}, {1, -1}, c2.form()) == Weight{-1, 1});
  CHECK(reflect({2, 0}, {0, 2}, c2.form()) == Weight{0, 2});
  CHECK_THROWS_AS(reflect({0, 0}, {1, 1}, c2.form()), std::invalid_argument);
  for (const auto& a : c2.nonzero_roots())
    for (const auto& b : c2.roots()) {
      CHECK(c2.contains(reflect(a, b, c2.form())));
      CHECK(reflect(a, reflect(a, b, c2.form()), c2.form()) == b);
    }
}

TEST_CASE("root strings") {
  auto c2 = build_finite_root_system(RootType::C, 2);
  auto member = [&](const Weight& w) { return c2.contains(w); };
  auto s = root_string({1, -1}, {1, -1}, c2.form(), member);
  CHECK(s.ok);
  CHECK(s.d == 2);
  CHECK(s.u == 0);
  s = root_string({1, -1}, {0, 2}, c2.form(), member);
  CHECK(s.ok);
  CHECK(s.d == 0);
  CHECK(s.u == 1);
  CHECK(s.cartan == -1);
  s = root_string({2, 0}, {0, 2}, c2.form(), member);
  CHECK(s.ok);
  CHECK(s.d == 0);
  CHECK(s.u == 0);
  for (const auto& a : c2.nonzero_roots())
    for (const auto& b : c2.roots()) {
      auto r = root_string(b, a, c2.form(), member);
      CHECK(r.ok);
    }
  // a broken string is reported
  auto broken = [&](const Weight& w) { return w == Weight{0, 0} || w == Weight{2, 0} || w == Weight{4, 0}; };
  CHECK_FALSE(root_string({0, 0}, {2, 0}, c2.form(), broken).ok);
}
