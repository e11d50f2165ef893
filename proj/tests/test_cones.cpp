#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/cones.hpp"
#include "kummer/error.hpp"
#include "kummer/pell.hpp"

using namespace kummer;

namespace {

MukaiVector mv(long r, long c, long a) { return {Integer(r), Integer(c), Integer(a)}; }
Rational q(long a, long b) { return Rational(a, b); }

bool trivial3(long n) { return is_trivial_pell(SurfaceParams(n, 3)); }

}  // namespace

TEST_CASE("rays") {
  CHECK(ray_for_slope(q(1, 2)) == Ray{2, -1});
  CHECK(ray_for_slope(q(24, 17)) == Ray{17, -24});
  CHECK(ray_for_slope(Rational(0)) == Ray{1, 0});
  CHECK(cone_from_h(q(4, 3)) == Cone{{1, 0}, {3, -4}});
  CHECK_THROWS_AS(cone_from_h(Rational(0)), Error);
}

TEST_CASE("classification") {
  CHECK(classify_km2(1) == TableRow::NotDivisibleBy3);
  CHECK(classify_km2(12) == TableRow::MSquare);
  CHECK(classify_km2(6) == TableRow::X1EvenY1DivisibleBy3);
  CHECK(classify_km2(18) == TableRow::X1EvenY1NotDivisibleBy3);
  CHECK(classify_km2(9) == TableRow::X1OddY1NotDivisibleBy3);
  CHECK(std::string(to_string(TableRow::NotDivisibleBy3)) ==
        "NDivisibleCase_3ndivn");
  CHECK(std::string(to_string(TableRow::MSquare)) == "MSquare");
}

TEST_CASE("nef and movable boundaries") {
  auto nef = nef_boundary_km2(1);
  CHECK(nef.boundary_slope == q(1, 2));
  CHECK(nef.cone == Cone{{1, 0}, {2, -1}});
  REQUIRE(nef.wall);
  CHECK(nef.wall->u == mv(1, 1, 1));
  CHECK(nef.wall->d == 2);
  CHECK(nef.pell_index == 1u);
  CHECK(movable_boundary_km2(1).boundary_slope == q(1, 2));

  nef = nef_boundary_km2(6);
  CHECK(nef.boundary_slope == q(4, 3));
  CHECK(nef.wall->u == mv(2, 1, 3));
  CHECK(nef.wall->d == 3);
  auto mov = movable_boundary_km2(6);
  CHECK(mov.boundary_slope == q(24, 17));
  CHECK(mov.wall->u == mv(3, 2, 8));
  CHECK(mov.wall->d == 1);
  CHECK(mov.pell_index == 2u);

  nef = nef_boundary_km2(9);
  CHECK(nef.boundary_slope == q(12, 7));
  CHECK(nef.wall->u == mv(4, 2, 9));
  CHECK(nef.pell_index == 2u);
  mov = movable_boundary_km2(9);
  CHECK(mov.boundary_slope == q(45, 26));
  CHECK(mov.wall->u == mv(9, 5, 25));
  CHECK(mov.wall->d == 2);
  CHECK(mov.pell_index == 3u);

  auto sq = nef_boundary_km2(12);
  CHECK(sq.boundary_slope == 2);
  CHECK_FALSE(sq.wall);
  CHECK(movable_boundary_km2(3).boundary_slope == 1);
}

TEST_CASE("table agrees with the walk") {
  for (long n = 1; n <= 200; ++n) {
    CAPTURE(n);
    auto nt = nef_boundary_table(n), ni = nef_boundary_iterative(n);
    auto mt = movable_boundary_table(n), mi = movable_boundary_iterative(n);
    REQUIRE(nt.boundary_slope == ni.boundary_slope);
    REQUIRE(mt.boundary_slope == mi.boundary_slope);
    REQUIRE(nt.pell_index == ni.pell_index);
    REQUIRE(mt.pell_index == mi.pell_index);
    auto [kn, km] = table_indices(classify_km2(n));
    if (!trivial3(n)) {
      REQUIRE(ni.pell_index == kn);
      REQUIRE(mi.pell_index == km);
    }
  }
}

TEST_CASE("nesting and boundary square") {
  for (long l : {3, 4, 5}) {
    for (long n = 1; n <= 500; ++n) {
      SurfaceParams p(n, l);
      auto mov = movable_boundary_general(n, l);
      Ray r = mov.cone.right;
      Integer sq = bb_pairing({r.p, r.q}, {r.p, r.q}, p);
      if (is_trivial_pell(p)) {
        REQUIRE(sq == 0);
        REQUIRE(mov.boundary_slope == rational_sqrt_ratio(n, l));
        continue;
      }
      REQUIRE(sq > 0);
      REQUIRE(l * mov.boundary_slope * mov.boundary_slope < n);
      if (l == 3) {
        auto nef = nef_boundary_km2(n);
        REQUIRE(nef.boundary_slope <= mov.boundary_slope);
        REQUIRE(nef.boundary_slope > 0);
      }
    }
  }
}

TEST_CASE("corollaries") {
  CHECK(nef_equals_movable_criterion(1));
  CHECK(nef_equals_movable_criterion(12));
  CHECK_FALSE(nef_equals_movable_criterion(6));
  for (long n = 1; n <= 1000; ++n)
    if (nef_equals_movable_criterion(n))
      REQUIRE(nef_boundary_km2(n).boundary_slope ==
              movable_boundary_km2(n).boundary_slope);

  CHECK(hilbert_chow_movable_boundary_test(2));
  CHECK(hilbert_chow_movable_boundary_test(24));
  CHECK_FALSE(hilbert_chow_movable_boundary_test(9));
  CHECK_THROWS_AS(hilbert_chow_movable_boundary_test(3), Error);
  for (long n = 1; n <= 300; ++n) {
    if (trivial3(n)) continue;
    REQUIRE(hilbert_chow_movable_boundary_test(n) ==
            (movable_boundary_km2(n).wall->d == 1));
  }
}

TEST_CASE("isomorphism congruences") {
  CHECK_FALSE(lemma41_congruence_test(Integer(17), 6));
  CHECK(lemma41_congruence_test(Integer(-7), 1));
  CHECK_FALSE(lemma41_congruence_test(Integer(49), 2));
  CHECK(lemma41_congruence_test(Integer(-1), 30));
  CHECK(lemma41_congruence_test(Integer(14), 5));
  CHECK_FALSE(lemma41_congruence_test(Integer(13), 5));
}

TEST_CASE("factorizations") {
  auto f = mukai_factorizations(mv(3, 2, 8), 6);
  bool found = false;
  for (const auto& x : f) {
    Integer s(x.s), t(x.t);
    REQUIRE(x.s * x.t == 6);
    REQUIRE(s * x.a * x.a == 3);
    REQUIRE(x.a * x.b == 2);
    REQUIRE(t * x.b * x.b == 8);
    found = true;
  }
  CHECK(found);
  CHECK(mukai_factorizations(mv(1, 0, 5), 6).empty());
}

TEST_CASE("chamber examples") {
  auto c = chamber_decomposition_km2(1, false);
  REQUIRE(c.size() == 1);
  CHECK(c[0].cone == Cone{{1, 0}, {2, -1}});
  CHECK(c[0].model == ModelKind::SelfModel);

  c = chamber_decomposition_km2(6, true);
  REQUIRE(c.size() == 2);
  CHECK(c[0].cone.right == Ray{3, -4});
  CHECK(c[1].cone == Cone{{3, -4}, {17, -24}});
  CHECK(c[1].model == ModelKind::ModuliKummer);
  REQUIRE(c[1].u);
  CHECK(*c[1].u == mv(3, 2, 8));
  CHECK(chamber_decomposition_km2(6, false)[1].iso_to_original ==
        Isomorphism::Unknown);

  c = chamber_decomposition_km2(18, false);
  REQUIRE(c.size() == 3);
  CHECK(c[0].cone.right == ray_for_slope(q(12, 5)));
  CHECK(c[1].cone.right == ray_for_slope(q(120, 49)));
  CHECK(c[2].cone.right == ray_for_slope(q(1188, 485)));
  CHECK(c[1].model == ModelKind::FlopModel);
  CHECK(c[2].model == ModelKind::ModuliKummer);

  c = chamber_decomposition_km2(9, true);
  REQUIRE(c.size() == 2);
  CHECK(c[1].model == ModelKind::FlopModel);
  CHECK(c[1].iso_to_original == Isomorphism::No);
}

TEST_CASE("chambers tile the movable cone") {
  for (long n = 1; n <= 200; ++n) {
    CAPTURE(n);
    auto c = chamber_decomposition_km2(n, true);
    REQUIRE(!c.empty());
    REQUIRE(c.front().cone == nef_boundary_km2(n).cone);
    REQUIRE(c.back().cone.right == movable_boundary_km2(n).cone.right);
    for (std::size_t i = 0; i < c.size(); ++i) {
      REQUIRE(c[i].index == i + 1);
      if (i > 0) REQUIRE(c[i].cone.left == c[i - 1].cone.right);
    }
    std::size_t expected = 1;
    switch (classify_km2(n)) {
      case TableRow::X1EvenY1DivisibleBy3: expected = 2; break;
      case TableRow::X1EvenY1NotDivisibleBy3: expected = 3; break;
      case TableRow::X1OddY1NotDivisibleBy3: expected = 2; break;
      default: break;
    }
    REQUIRE(c.size() == expected);
  }
}

TEST_CASE("general l") {
  auto b = movable_boundary_general(2, 4);
  CHECK(b.boundary_slope == q(2, 3));
  CHECK(b.wall->u == mv(1, 1, 2));
  CHECK(b.wall->d == 2);

  b = movable_boundary_general(1, 5);
  CHECK(b.boundary_slope == q(4, 9));
  CHECK(b.wall->u == mv(1, 2, 4));
  CHECK(b.wall->d == 1);

  b = movable_boundary_general(1, 8);
  CHECK(b.boundary_slope == q(6, 17));
  CHECK(b.wall->u == mv(-1, -3, -9));
  CHECK(b.wall->d == 1);

  b = movable_boundary_general(1, 4);
  CHECK(b.boundary_slope == q(1, 2));
  CHECK_FALSE(b.wall);

  CHECK(rational_sqrt_ratio(8, 18) == q(2, 3));
  CHECK_THROWS_AS(rational_sqrt_ratio(2, 3), Error);

  for (long n = 1; n <= 200; ++n)
    REQUIRE(movable_boundary_general(n, 3).boundary_slope ==
            movable_boundary_km2(n).boundary_slope);
}
