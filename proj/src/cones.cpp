#include "kummer/cones.hpp"

#include <string>
#include <utility>

#include "kummer/error.hpp"

namespace kummer {

namespace {

constexpr std::int64_t kKm2L = 3;

Rational boundary_slope(const SurfaceParams& p, const PellSolution& s) {
  return make_rational(p.n_int() * s.x, p.l_int() * s.y);
}

BoundaryReport trivial_report(std::int64_t n, std::int64_t l) {
  const Rational slope = rational_sqrt_ratio(n, l);
  return BoundaryReport{cone_from_h(slope), slope, std::nullopt, std::nullopt};
}

BoundaryReport report_at(const SurfaceParams& p, const PellSolution& s,
                         std::int64_t max_d) {
  auto wall = admissible_wall_vector(s.x, s.y, p, max_d);
  if (!wall) {
    throw Error(ErrorCode::InternalError,
                "table predicts an admissible wall at k = " +
                    std::to_string(s.k) + " for n = " + std::to_string(p.n()) +
                    " but none exists");
  }
  const Rational slope = boundary_slope(p, s);
  return BoundaryReport{cone_from_h(slope), slope, std::move(wall), s.k};
}

BoundaryReport table_boundary(std::int64_t n, bool nef) {
  const TableRow row = classify_km2(n);
  if (row == TableRow::MSquare) return trivial_report(n, kKm2L);
  const SurfaceParams p(n, kKm2L);
  const auto [k_nef, k_mov] = table_indices(row);
  const PellEquation eq(p);
  return report_at(p, eq.at(nef ? k_nef : k_mov),
                   nef ? kNefMaxPairing : kMovableMaxPairing);
}

BoundaryReport iterative_boundary(std::int64_t n, std::int64_t max_d) {
  const SurfaceParams p(n, kKm2L);
  if (is_trivial_pell(p)) return trivial_report(n, kKm2L);
  const PellEquation eq(p);
  PellSolution s{0, 1, 0};
  for (std::size_t k = 1; k <= kMaxWalkIndex; ++k) {
    s = eq.next(s);
    if (auto wall = admissible_wall_vector(s.x, s.y, p, max_d)) {
      const Rational slope = boundary_slope(p, s);
      return BoundaryReport{cone_from_h(slope), slope, std::move(wall), k};
    }
  }
  throw Error(ErrorCode::InternalError,
              "no admissible wall within k <= " +
                  std::to_string(kMaxWalkIndex) + " for n = " +
                  std::to_string(n));
}

void check_same(const BoundaryReport& walk, const BoundaryReport& table,
                std::int64_t n, const char* which) {
  if (walk.boundary_slope != table.boundary_slope ||
      walk.pell_index != table.pell_index) {
    throw Error(ErrorCode::InternalError,
                std::string(which) + " boundary for n = " + std::to_string(n) +
                    ": iteration gives " + to_string(walk.boundary_slope) +
                    ", table gives " + to_string(table.boundary_slope));
  }
}

std::vector<std::int64_t> odd_prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  while (n % 2 == 0) n /= 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f != 0) continue;
    primes.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

Chamber make_chamber(std::size_t index, const Rational& from,
                     const Rational& to, ModelKind model,
                     Isomorphism iso = Isomorphism::Unknown) {
  Chamber ch;
  ch.cone = Cone{from == 0 ? Ray{1, 0} : ray_for_slope(from),
                 ray_for_slope(to)};
  ch.index = index;
  ch.model = model;
  ch.iso_to_original = iso;
  return ch;
}

Isomorphism moduli_kummer_iso(const WallVectorReport& wall, std::int64_t n,
                              bool end_a_is_z) {
  if (!end_a_is_z) return Isomorphism::Unknown;
  return lemma41_congruence_test(wall.source_y, n) ? Isomorphism::Yes
                                                   : Isomorphism::No;
}

}  // namespace

Ray ray_for_slope(const Rational& slope) {
  if (slope < 0) {
    throw Error(ErrorCode::InvalidArgument, "ray slope must be nonnegative");
  }
  return Ray{slope.get_den(), -slope.get_num()};
}

Cone cone_from_h(const Rational& slope) {
  if (slope <= 0) {
    throw Error(ErrorCode::InternalError, "degenerate cone at slope 0");
  }
  return Cone{Ray{1, 0}, ray_for_slope(slope)};
}

const char* to_string(TableRow row) noexcept {
  switch (row) {
    case TableRow::NotDivisibleBy3: return "NDivisibleCase_3ndivn";
    case TableRow::X1DivisibleBy3: return "X1div3";
    case TableRow::X1EvenY1DivisibleBy3: return "X1even_Y1div3";
    case TableRow::X1EvenY1NotDivisibleBy3: return "X1even_Y1ndiv3";
    case TableRow::X1OddY1DivisibleBy3: return "X1odd_Y1div3";
    case TableRow::X1OddY1NotDivisibleBy3: return "X1odd_Y1ndiv3";
    case TableRow::MSquare: return "MSquare";
  }
  return "?";
}

TableRow classify_km2(std::int64_t n) {
  const SurfaceParams p(n, kKm2L);
  if (!p.n_divisible_by_3()) return TableRow::NotDivisibleBy3;
  if (is_trivial_pell(p)) return TableRow::MSquare;
  const PellSolution s = fundamental_solution(p);
  if (divides(3, s.x)) return TableRow::X1DivisibleBy3;
  const bool y_div3 = divides(3, s.y);
  if (divides(2, s.x)) {
    return y_div3 ? TableRow::X1EvenY1DivisibleBy3
                  : TableRow::X1EvenY1NotDivisibleBy3;
  }
  return y_div3 ? TableRow::X1OddY1DivisibleBy3
                : TableRow::X1OddY1NotDivisibleBy3;
}

std::pair<std::size_t, std::size_t> table_indices(TableRow row) {
  switch (row) {
    case TableRow::NotDivisibleBy3:
    case TableRow::X1DivisibleBy3: return {1, 1};
    case TableRow::X1EvenY1DivisibleBy3: return {1, 2};
    case TableRow::X1EvenY1NotDivisibleBy3: return {1, 3};
    case TableRow::X1OddY1DivisibleBy3: return {2, 2};
    case TableRow::X1OddY1NotDivisibleBy3: return {2, 3};
    case TableRow::MSquare: return {0, 0};
  }
  return {0, 0};
}

BoundaryReport nef_boundary_table(std::int64_t n) {
  return table_boundary(n, true);
}

BoundaryReport movable_boundary_table(std::int64_t n) {
  return table_boundary(n, false);
}

BoundaryReport nef_boundary_iterative(std::int64_t n) {
  return iterative_boundary(n, kNefMaxPairing);
}

BoundaryReport movable_boundary_iterative(std::int64_t n) {
  return iterative_boundary(n, kMovableMaxPairing);
}

BoundaryReport nef_boundary_km2(std::int64_t n) {
  auto walk = nef_boundary_iterative(n);
  check_same(walk, nef_boundary_table(n), n, "nef");
  return walk;
}

BoundaryReport movable_boundary_km2(std::int64_t n) {
  auto walk = movable_boundary_iterative(n);
  check_same(walk, movable_boundary_table(n), n, "movable");
  return walk;
}

bool nef_equals_movable_criterion(std::int64_t n) {
  return n % 3 != 0 || n % 9 == 3;
}

bool hilbert_chow_movable_boundary_test(std::int64_t n) {
  const SurfaceParams p(n, kKm2L);
  const PellSolution s = fundamental_solution(p);  // TrivialPell if 3n square
  if (divides(2, s.x)) return true;
  const Integer r6 = mod(s.x, 6);
  return p.n_divisible_by_3() && (r6 == 1 || r6 == 5) && divides(3, s.y);
}

bool lemma41_congruence_test(const Integer& y, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  for (const auto prime : odd_prime_divisors(n)) {
    if (!divides(to_integer(prime), y + 1)) return false;
  }
  if (n % 2 == 0 && !divides(4, y + 1)) return false;
  return true;
}

std::vector<MukaiFactorization> mukai_factorizations(const MukaiVector& u,
                                                     std::int64_t n) {
  std::vector<MukaiFactorization> out;
  MukaiVector w = (u.r < 0 || u.a < 0) ? -u : u;
  if (w.r < 0 || w.a < 0) return out;
  for (std::int64_t s = 1; s <= n; ++s) {
    if (n % s != 0) continue;
    const std::int64_t t = n / s;
    const Integer si = to_integer(s), ti = to_integer(t);
    if (!divides(si, w.r) || !divides(ti, w.a)) continue;
    const Integer ra = exact_div(w.r, si), ab = exact_div(w.a, ti);
    if (!is_perfect_square(ra) || !is_perfect_square(ab)) continue;
    const Integer a = isqrt(ra);
    Integer b = isqrt(ab);
    if (a * b == -w.c) b = -b;
    if (a * b != w.c) continue;
    out.push_back({s, t, a, b});
  }
  return out;
}

const char* to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::SelfModel: return "SelfModel";
    case ModelKind::FlopModel: return "FlopModel";
    case ModelKind::ModuliKummer: return "ModuliKummer";
  }
  return "?";
}

const char* to_string(Isomorphism iso) noexcept {
  switch (iso) {
    case Isomorphism::Yes: return "yes";
    case Isomorphism::No: return "no";
    case Isomorphism::Unknown: return "unknown";
  }
  return "?";
}

std::vector<Chamber> chamber_decomposition_km2(std::int64_t n,
                                               bool end_a_is_z) {
  const TableRow row = classify_km2(n);
  const auto mov = movable_boundary_km2(n);
  std::vector<Chamber> out;
  auto self = [&](const Rational& to) {
    out.push_back(make_chamber(1, 0, to, ModelKind::SelfModel,
                               Isomorphism::Yes));
  };
  if (row != TableRow::X1EvenY1DivisibleBy3 &&
      row != TableRow::X1EvenY1NotDivisibleBy3 &&
      row != TableRow::X1OddY1NotDivisibleBy3) {
    self(mov.boundary_slope);
    return out;
  }

  const SurfaceParams p(n, kKm2L);
  const PellEquation eq(p);
  const auto seq = eq.sequence(3);
  auto slope = [&](std::size_t k) { return boundary_slope(p, seq[k]); };

  if (row == TableRow::X1EvenY1DivisibleBy3) {
    // u = (Y_1^2/3, (Y_1 X_1/3) H, m X_1^2) bounds the movable cone.
    const Integer& x1 = seq[1].x;
    const Integer& y1 = seq[1].y;
    const MukaiVector expected{exact_div(y1 * y1, 3), exact_div(y1 * x1, 3),
                               to_integer(p.m()) * x1 * x1};
    if (!mov.wall || mov.wall->u != expected) {
      throw Error(ErrorCode::InternalError,
                  "unexpected movable wall vector for n = " +
                      std::to_string(n));
    }
    self(slope(1));
    auto second = make_chamber(2, slope(1), slope(2), ModelKind::ModuliKummer,
                               moduli_kummer_iso(*mov.wall, n, end_a_is_z));
    second.u = mov.wall->u;
    out.push_back(std::move(second));
  } else if (row == TableRow::X1EvenY1NotDivisibleBy3) {
    self(slope(1));
    out.push_back(make_chamber(2, slope(1), slope(2), ModelKind::FlopModel));
    auto third = make_chamber(3, slope(2), slope(3), ModelKind::ModuliKummer,
                              moduli_kummer_iso(*mov.wall, n, end_a_is_z));
    third.u = mov.wall->u;
    out.push_back(std::move(third));
  } else {
    // The movable wall has <u, v> = 2, never +-1, so M_2 is not Km^2(A).
    self(slope(2));
    out.push_back(make_chamber(2, slope(2), slope(3), ModelKind::FlopModel,
                               Isomorphism::No));
  }
  if (out.back().cone.right != mov.cone.right) {
    throw Error(ErrorCode::InternalError,
                "chambers do not end at the movable boundary for n = " +
                    std::to_string(n));
  }
  return out;
}

Rational rational_sqrt_ratio(std::int64_t n, std::int64_t l) {
  const Rational ratio = make_rational(to_integer(n), to_integer(l));
  const Integer& num = ratio.get_num();
  const Integer& den = ratio.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) {
    throw Error(ErrorCode::InvalidArgument,
                "sqrt(n/l) is irrational for n = " + std::to_string(n) +
                    ", l = " + std::to_string(l));
  }
  return make_rational(isqrt(num), isqrt(den));
}

BoundaryReport movable_boundary_general(std::int64_t n, std::int64_t l) {
  const SurfaceParams p(n, l);
  if (is_trivial_pell(p)) return trivial_report(n, l);
  const Integer li = p.l_int(), ni = p.n_int();
  const PellUnit unit = fundamental_divisible_solution(p);
  const PellEquation eq(p);

  auto index_of = [&](const Integer& x) -> std::size_t {
    PellSolution s{0, 1, 0};
    while (s.x < x) s = eq.next(s);
    if (s.x != x) {
      throw Error(ErrorCode::InternalError,
                  "X = " + to_string(x) + " is not in the Pell sequence");
    }
    return s.k;
  };

  WallVectorReport wall;
  Integer x_abs, y_abs;
  bool found = false;
  for (const int sign : {1, -1}) {
    const Integer y = sign * unit.y;
    const Integer z = sign * unit.w;
    if (!divides(li, y + 1)) continue;
    const Integer k_prime = exact_div(y + 1, li);
    if (igcd(k_prime, z, 2) == 1) {
      wall.u = {k_prime, z, y - 1};
      wall.d = 2;
    } else {
      wall.u = {exact_div(y + 1, 2 * li), exact_div(z, 2),
                exact_div(y - 1, 2)};
      wall.d = 1;
    }
    wall.source_x = li * z;
    wall.source_y = y;
    x_abs = li * unit.w;
    y_abs = unit.y;
    found = true;
    break;
  }
  if (!found) {
    // l divides neither Y_1 + 1 nor Y_1 - 1: the second solution
    // (2 Y_1 Z_1, Y_1^2 + l n Z_1^2) with sign -1 gives
    // u = -(n Z_1^2, Z_1 Y_1 H, Y_1^2).
    const Integer& z1 = unit.w;
    const Integer& y1 = unit.y;
    wall.u = {-ni * z1 * z1, -z1 * y1, -y1 * y1};
    wall.d = 1;
    x_abs = li * 2 * y1 * z1;
    y_abs = y1 * y1 + li * ni * z1 * z1;
    wall.source_x = -x_abs;
    wall.source_y = -y_abs;
  }
  wall.g = 2 * l / wall.d;

  const MukaiVector v = distinguished_vector(p);
  if (mukai_square(wall.u, p) != 0 ||
      mukai_pairing(wall.u, v, p) != wall.d || !wall.u.is_primitive()) {
    throw Error(ErrorCode::InternalError,
                "movable wall vector fails isotropy, primitivity or pairing");
  }
  const Rational slope = make_rational(ni * x_abs, li * y_abs);
  return BoundaryReport{cone_from_h(slope), slope, std::move(wall),
                        index_of(x_abs)};
}

}  // namespace kummer
