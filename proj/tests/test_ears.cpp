#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ealie/constructions.hpp"
#include "ealie/ears.hpp"
#include "ealie/finroot.hpp"

using namespace ealie;

namespace {

std::set<Lattice> box_set(int nu, int w) {
  auto b = lattice_box(nu, w);
  return {b.begin(), b.end()};
}

QMatrix id(int n) { return QMatrix::identity(n); }

RootData finite_data(std::set<std::vector<int>> finite, int ell, QMatrix form) {
  std::set<Root> roots;
  for (auto f : finite) roots.insert(Root{f, {}});
  return root_data_from_set(ell, 0, std::move(form), roots, 0);
}

// Roots of an affine-type set: every finite root of C2 plus every lattice point.
std::set<Root> c2_times_lattice(int w) {
  auto c2 = build_finite_root_system(RootType::C, 2);
  std::set<Root> out;
  for (const auto& d : lattice_box(2, w))
    for (const auto& f : c2.roots()) out.insert(Root{f, d});
  return out;
}

}  // namespace

TEST_CASE("semilattices") {
  CHECK(check_semilattice(box_set(2, 3), 2, 3).ok());
  std::set<Lattice> cosets;
  for (const auto& d : lattice_box(2, 1))
    for (const auto& m : lattice_box(2, 2)) {
      Lattice p{d[0] * d[0] + 2 * m[0], d[1] * d[1] + 2 * m[1]};  // {0, d1, d2, d1 + d2} + 2Z^2
      if (lattice_sup_norm(p) <= 3) cosets.insert(p);
    }
  CHECK(check_semilattice(cosets, 2, 3).ok());

  // 2Z x Z together with d1 + 2Z x Z
  std::set<Lattice> even_plus_d1;
  for (const auto& d : lattice_box(2, 3))
    if (d[1] % 2 == 0) even_plus_d1.insert(d);
  CHECK(check_semilattice(even_plus_d1, 2, 3).ok());

  std::set<Lattice> bad{{0, 0}, {1, 0}};
  auto v = check_semilattice(bad, 2, 3);
  CHECK(v.status == Status::Fail);
  CHECK(v.witness == "(1,0) + 2(1,0) = (3,0) not in S");

  std::set<Lattice> no_zero{{1, 0}, {-1, 0}};
  CHECK(check_semilattice(no_zero, 2, 3).witness == "0 not in S");
  std::set<Lattice> flat;
  for (const auto& d : lattice_box(2, 3))
    if (d[1] == 0) flat.insert(d);
  CHECK(check_semilattice(flat, 2, 3).witness == "span has rank 1");
}

TEST_CASE("simple systems") {
  auto base_size = [](RootType t, int rank) {
    auto nz = build_finite_root_system(t, rank).nonzero_roots();
    return simple_system(std::set<std::vector<int>>(nz.begin(), nz.end())).size();
  };
  CHECK(base_size(RootType::C, 2) == 2);
  CHECK(base_size(RootType::B, 3) == 3);
  CHECK(base_size(RootType::BC, 2) == 2);
  CHECK(base_size(RootType::G, 2) == 2);
  CHECK(base_size(RootType::E, 6) == 6);
}

TEST_CASE("single orbit passes") {
  auto r = finite_data({{0}, {1}, {-1}}, 1, id(1));
  auto rep = check_ears_axioms(r);
  CHECK(rep.passed());
  for (const auto& v : rep.verdicts) CHECK_MESSAGE(v.ok(), v.axiom << ": " << v.witness);
  CHECK(rep.meta.at("reduced") == "true");
}

TEST_CASE("orthogonal pair fails R5a") {
  auto r = finite_data({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2, id(2));
  auto rep = check_ears_axioms(r);
  CHECK_FALSE(rep.passed());
  const Verdict* v = rep.find("R5a");
  REQUIRE(v);
  CHECK(v->status == Status::Fail);
  CHECK(v->witness == "components containing (-1,0 | ) and (0,-1 | )");
}

TEST_CASE("broken strings fail R4") {
  // A1 with an extra +-3 alpha: not a root system, and the string through 0 is broken
  auto r = finite_data({{0}, {1}, {-1}, {3}, {-3}}, 1, id(1));
  auto rep = check_ears_axioms(r);
  CHECK(rep.find("R4")->status == Status::Fail);
  CHECK(rep.find("finite-image")->status == Status::Fail);
}

TEST_CASE("non-reduced systems only flag R6") {
  auto bc1 = build_finite_root_system(RootType::BC, 1);
  auto r = finite_data(bc1.roots(), 1, bc1.form());
  auto rep = check_ears_axioms(r);
  CHECK(rep.passed());
  CHECK(rep.find("R6")->status == Status::Fail);
  CHECK(rep.meta.at("reduced") == "false");
  auto sets = support_sets(r);
  CHECK(sets.E.has_value());
}

TEST_CASE("affine-type set: supports and axioms") {
  auto c2 = build_finite_root_system(RootType::C, 2);
  auto r = root_data_from_set(2, 2, c2.form(), c2_times_lattice(4), 4);
  auto sets = support_sets(r);
  CHECK(sets.S == box_set(2, 4));
  REQUIRE(sets.L);
  CHECK(*sets.L == box_set(2, 4));
  CHECK_FALSE(sets.E);
  CHECK(sets.partition_ok);
  CHECK(sets.containment_ok);
  CHECK(sets.span_ok);
  CHECK(isotropic_rank(r) == 2);
  auto rep = check_ears_axioms(r);
  for (const auto& v : rep.verdicts) CHECK_MESSAGE(v.ok(), v.axiom << ": " << v.witness);
  CHECK(std::stoi(rep.meta.at("R4_pairs")) > 0);
}

TEST_CASE("long roots on even lattice points only") {
  // S = Z^2, L = 2Z^2: a semilattice pair of a twisted type
  auto c2 = build_finite_root_system(RootType::C, 2);
  std::set<Root> roots;
  for (const auto& d : lattice_box(2, 4))
    for (const auto& f : c2.roots()) {
      bool lg = c2.norm(f) == 2;
      if (lg && (d[0] % 2 != 0 || d[1] % 2 != 0)) continue;
      roots.insert(Root{f, d});
    }
  auto r = root_data_from_set(2, 2, c2.form(), roots, 4);
  auto sets = support_sets(r);
  CHECK(sets.S == box_set(2, 4));
  REQUIRE(sets.L);
  CHECK(sets.L->size() == 25);
  CHECK(check_semilattice(*sets.L, 2, 4).ok());
  CHECK(check_ears_axioms(r).passed());
}

TEST_CASE("window of sp4 and of the affinized example") {
  RootSystemWindow sp4(std::make_shared<ClassicalAlgebra>("C", 2), 0);
  auto d0 = root_data(sp4);
  auto s0 = support_sets(d0);
  CHECK(s0.S == std::set<Lattice>{Lattice{}});
  CHECK(*s0.L == std::set<Lattice>{Lattice{}});
  CHECK(check_ears_axioms(d0).passed());
  CHECK(isotropic_rank(d0) == 0);

  auto g = std::make_shared<SkewTorusAlgebra>(2, SignMatrix(2, {-1}), true);
  RootSystemWindow win(std::make_shared<AffinizedAlgebra>(g), 1);
  auto d = root_data(win);
  auto sets = support_sets(d);
  CHECK(sets.S == box_set(2, 1));
  CHECK(*sets.L == box_set(2, 1));
  auto rep = check_ears_axioms(d);
  for (const auto& v : rep.verdicts) CHECK_MESSAGE(v.ok(), v.axiom << ": " << v.witness);
  CHECK(isotropic_rank(d) == 2);
}
