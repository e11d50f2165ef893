#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kummer/error.hpp"
#include "kummer/oracle.hpp"
#include "kummer/pell.hpp"

using namespace kummer;

namespace {

PellSolution sol(long x, long y, std::size_t k) {
  return {Integer(x), Integer(y), k};
}

bool is_square(long m) {
  long r = 0;
  while (r * r < m) ++r;
  return r * r == m;
}

}  // namespace

TEST_CASE("trivial pell") {
  CHECK(is_trivial_pell(SurfaceParams(3, 3)));
  CHECK_FALSE(is_trivial_pell(SurfaceParams(1, 3)));
  CHECK(is_trivial_pell(SurfaceParams(1, 4)));
  CHECK(is_trivial_pell(SurfaceParams(12, 3)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SurfaceParams(0, 3), Error);
  CHECK_THROWS_AS(SurfaceParams(1, 2), Error);
  CHECK_THROWS_AS(SurfaceParams(SurfaceParams::kMaxParameter + 1, 3), Error);
  CHECK_THROWS_AS(SurfaceParams(1, 3).m(), Error);
  CHECK(SurfaceParams(18, 3).m() == 6);
}

TEST_CASE("fundamental solution") {
  CHECK(fundamental_solution(SurfaceParams(1, 3)) == sol(3, 2, 1));
  CHECK(fundamental_solution(SurfaceParams(6, 3)) == sol(2, 3, 1));
  CHECK(fundamental_solution(SurfaceParams(2, 4)) == sol(4, 3, 1));
  CHECK(fundamental_solution(SurfaceParams(2, 3)) == sol(6, 5, 1));
  CHECK(fundamental_solution(SurfaceParams(9, 3)) == sol(1, 2, 1));

  try {
    fundamental_solution(SurfaceParams(3, 3));
    FAIL("expected TrivialPell");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrivialPell);
  }
}

TEST_CASE("continued fraction unit") {
  auto u = fundamental_unit(Integer(61));
  CHECK(u.y == Integer("1766319049"));
  CHECK(u.w == Integer("226153980"));
  CHECK_THROWS_AS(fundamental_unit(Integer(49)), Error);
}

TEST_CASE("next solution") {
  CHECK(next_solution(SurfaceParams(6, 3), sol(2, 3, 1)) == sol(12, 17, 2));
  CHECK(next_solution(SurfaceParams(1, 3), sol(0, 1, 0)) == sol(3, 2, 1));
  CHECK(next_solution(SurfaceParams(9, 3), sol(4, 7, 2)) == sol(15, 26, 3));

  try {
    next_solution(SurfaceParams(1, 3), sol(1, 1, 1));
    FAIL("expected IntegrityError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IntegrityError);
  }
}

TEST_CASE("solution sequence") {
  CHECK(solution_sequence(SurfaceParams(1, 3), 3) ==
        std::vector{sol(0, 1, 0), sol(3, 2, 1), sol(12, 7, 2), sol(45, 26, 3)});
  CHECK(solution_sequence(SurfaceParams(6, 3), 2) ==
        std::vector{sol(0, 1, 0), sol(2, 3, 1), sol(12, 17, 2)});
  CHECK(solution_sequence(SurfaceParams(7, 5), 0) ==
        std::vector{sol(0, 1, 0)});
  CHECK_THROWS_AS(solution_sequence(SurfaceParams(3, 3), 2), Error);

  PellEquation eq(SurfaceParams(18, 3));
  CHECK(eq.at(3) == sol(198, 485, 3));
}

TEST_CASE("divisible fundamental solution") {
  auto u = fundamental_divisible_solution(SurfaceParams(2, 4));
  CHECK(u.w == 1);
  CHECK(u.y == 3);
  u = fundamental_divisible_solution(SurfaceParams(1, 5));
  CHECK(u.w == 4);
  CHECK(u.y == 9);
}

// Brute force is the reference: the smallest positive X found by scanning is
// the fundamental solution and every scanned solution lies on the sequence.
TEST_CASE("agrees with brute force") {
  for (long l : {3, 4, 5, 8}) {
    for (long n = 1; n <= 60; ++n) {
      SurfaceParams p(n, l);
      if (is_trivial_pell(p)) {
        CHECK(brute_pell(p, Integer(2000)).size() == 1);
        continue;
      }
      auto seq = solution_sequence(p, 6);
      if (seq[1].x > 200000) continue;  // out of reach of a linear scan
      Integer x_max = seq[3].x < 200000 ? seq[3].x : Integer(200000);
      auto found = brute_pell(p, x_max);
      REQUIRE(found.size() >= 2);
      CHECK(found[1].x == seq[1].x);
      CHECK(found[1].y == seq[1].y);
      for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(found[i].x == seq[i].x);
        CHECK(found[i].y == seq[i].y);
      }
    }
  }
}

TEST_CASE("identity, monotonicity") {
  for (long l : {3, 4, 5, 8}) {
    for (long n = 1; n <= 500; ++n) {
      SurfaceParams p(n, l);
      if (is_trivial_pell(p)) continue;
      auto seq = solution_sequence(p, 15);
      for (std::size_t k = 0; k < seq.size(); ++k) {
        const auto& s = seq[k];
        REQUIRE(s.k == k);
        REQUIRE(l * s.y * s.y - n * s.x * s.x == l);
        REQUIRE(n * s.x * s.x < l * s.y * s.y);
        if (k + 1 < seq.size())
          REQUIRE(s.x * seq[k + 1].y < seq[k + 1].x * s.y);
      }
    }
  }
}

TEST_CASE("convergence of the wall slope for n = 1") {
  // slope_k = X_k / (3 Y_k) approaches 1/sqrt(3): |s - 1/sqrt3| < 1e-3 iff
  // (s + 1e-3)^2 > 1/3, given s < 1/sqrt 3.
  auto seq = solution_sequence(SurfaceParams(1, 3), 12);
  Rational eps(1, 1000);
  for (std::size_t k = 5; k < seq.size(); ++k) {
    Rational s(seq[k].x, 3 * seq[k].y);
    s.canonicalize();
    CHECK(3 * s * s < 1);
    CHECK(3 * (s + eps) * (s + eps) > 1);
  }
}

TEST_CASE("mod 3 laws for Y^2 - m X^2 = 1") {
  for (long m = 1; m <= 200; ++m) {
    if (is_square(m)) continue;
    SurfaceParams p(3 * m, 3);
    for (const auto& s : solution_sequence(p, 15)) {
      bool x3 = divides(Integer(3), s.x);
      bool y3 = divides(Integer(3), s.y);
      if (m % 3 == 0) REQUIRE_FALSE(y3);
      if (m % 3 == 1) REQUIRE((x3 && !y3));
      if (m % 3 == 2) REQUIRE(((x3 && !y3) || (!x3 && y3)));
    }
  }
}
