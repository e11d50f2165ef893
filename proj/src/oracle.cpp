#include "kummer/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "kummer/cones.hpp"
#include "kummer/error.hpp"

namespace kummer {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

struct Interval {
  i64 lo;
  i64 hi;
  bool empty() const { return lo > hi; }
};

// coef * a <= rhs
void restrict_le(Interval& iv, i64 coef, i64 rhs) {
  if (coef > 0) {
    iv.hi = std::min(iv.hi, floor_div(rhs, coef));
  } else if (coef < 0) {
    iv.lo = std::max(iv.lo, ceil_div(rhs, coef));
  } else if (rhs < 0) {
    iv.lo = 1;
    iv.hi = 0;
  }
}

// coef * a >= rhs
void restrict_ge(Interval& iv, i64 coef, i64 rhs) {
  restrict_le(iv, -coef, -rhs);
}

struct Small {
  i64 r, c, a;
};

// 64-bit evaluation of the Mukai pairing; the box is small enough.
struct Lattice {
  i64 n;
  i64 l;

  i128 pair(const Small& x, const Small& y) const {
    return i128(2) * n * x.c * y.c - i128(x.r) * y.a - i128(x.a) * y.r;
  }
  Small v() const { return {1, 0, -l}; }
  static Small minus(const Small& x, const Small& y) {
    return {x.r - y.r, x.c - y.c, x.a - y.a};
  }

  bool gamma(const Small& u) const {
    const Small w = minus(v(), u);
    const i128 u2 = pair(u, u);
    const i128 uv = pair(u, v());
    return pair(u, w) > 0 && u2 >= 0 && pair(w, w) >= 0 &&
           uv * uv > pair(v(), v()) * u2;
  }

  // |q/p| of the wall, as (num, den) with den > 0; den == 0 when the wall
  // is the delta axis or u is a multiple of v.
  std::pair<i128, i128> wall(const Small& u) const {
    i128 num = i128(2) * n * u.c;
    i128 den = i128(l) * u.r + u.a;
    if (num < 0) num = -num;
    if (den < 0) den = -den;
    return {num, den};
  }

  bool meets_positive_cone(i128 num, i128 den) const {
    return i128(n) * den * den > i128(l) * num * num;
  }
};

MukaiVector to_mukai(const Small& s) {
  return {to_integer(s.r), to_integer(s.c), to_integer(s.a)};
}

struct PartialScan {
  std::size_t count = 0;
  std::optional<std::pair<i128, i128>> nef_slope;
  Small nef_u{};
  std::optional<std::pair<i128, i128>> mov_slope;
  Small mov_u{};
  bool zero_wall = false;
  std::optional<Small> lemma_bad;
  std::optional<Small> complement_bad;
  std::vector<Small> members;
};

bool less(const std::pair<i128, i128>& x, const std::pair<i128, i128>& y) {
  return x.first * y.second < y.first * x.second;
}

void check_bounds(const SurfaceParams& p, const EnumerationBounds& b) {
  if (b.max_component < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_component must be >= 1");
  }
  // Keeps 2n*c^2 and l*r in 64 bits with room to spare.
  const long double big = static_cast<long double>(p.n()) * b.max_component *
                          b.max_component;
  if (b.max_component > (i64(1) << 24) || big > 1e17L) {
    throw Error(ErrorCode::InvalidArgument,
                "enumeration bound " + std::to_string(b.max_component) +
                    " is too large for n = " + std::to_string(p.n()));
  }
}

// Candidates a for fixed (r, c): the three linear Gamma conditions cut an
// interval, the quadratic one is checked per candidate.
template <typename Visit>
void scan_rows(const Lattice& lat, i64 bound, i64 r_lo, i64 r_hi,
               Visit&& visit) {
  const i64 n = lat.n, l = lat.l;
  for (i64 r = r_lo; r <= r_hi; ++r) {
    // u^2 < <u,v> <= l + u^2/2 forces n*c^2 - r*a < l, so
    // n*c^2 < l + |r|*bound.
    const long double cap = (static_cast<long double>(l) +
                             static_cast<long double>(std::llabs(r)) * bound) /
                            n;
    i64 c_max = static_cast<i64>(std::sqrt(cap)) + 1;
    while (c_max > 0 && n * c_max * c_max >= l + std::llabs(r) * bound) {
      --c_max;
    }
    c_max = std::min(c_max, bound);
    for (i64 c = -c_max; c <= c_max; ++c) {
      const i64 nc2 = n * c * c;
      Interval iv{-bound, bound};
      restrict_le(iv, r, nc2);                         // u^2 >= 0
      restrict_ge(iv, 2 * r - 1, 2 * nc2 - l * r + 1);  // <u,v> - u^2 > 0
      restrict_ge(iv, 1 - r, -nc2 - (1 - r) * l);     // (v-u)^2 >= 0
      for (i64 a = iv.lo; a <= iv.hi; ++a) {
        const Small u{r, c, a};
        if (lat.gamma(u)) visit(u);
      }
    }
  }
}

PartialScan scan_chunk(const Lattice& lat, i64 bound, i64 r_lo, i64 r_hi,
                       bool collect) {
  PartialScan out;
  const i64 l = lat.l;
  scan_rows(lat, bound, r_lo, r_hi, [&](const Small& u) {
    ++out.count;
    if (collect) out.members.push_back(u);

    const Small w = Lattice::minus(lat.v(), u);
    const i128 u2 = lat.pair(u, u);
    const i128 w2 = lat.pair(w, w);
    const i128 d = lat.pair(u, lat.v());
    const i128 dw = lat.pair(w, lat.v());
    const bool iso_u = u2 == 0 && d > 0 && d <= l;
    const bool iso_w = w2 == 0 && dw > 0 && dw <= l;
    if (!iso_u && !iso_w && !out.lemma_bad) out.lemma_bad = u;

    const auto [num, den] = lat.wall(u);
    if (den == 0) return;
    if (w2 == 0 && !out.complement_bad) {
      // Compare signed positions of both walls.
      const i128 su_num = i128(2) * lat.n * u.c;
      const i128 su_den = i128(l) * u.r + u.a;
      const i128 sw_num = i128(2) * lat.n * w.c;
      const i128 sw_den = i128(l) * w.r + w.a;
      if (sw_den != 0 && su_num * sw_den != sw_num * su_den) {
        out.complement_bad = u;
      }
    }
    if (num == 0) {
      out.zero_wall = true;
      return;
    }
    if (!lat.meets_positive_cone(num, den)) return;
    const std::pair<i128, i128> s{num, den};
    if (!out.nef_slope || less(s, *out.nef_slope)) {
      out.nef_slope = s;
      out.nef_u = u;
    }
    if (u2 == 0 && (d == 1 || d == 2) &&
        (!out.mov_slope || less(s, *out.mov_slope))) {
      out.mov_slope = s;
      out.mov_u = u;
    }
  });
  return out;
}

std::vector<PartialScan> run_chunks(const SurfaceParams& p,
                                    const EnumerationBounds& b, unsigned jobs,
                                    bool collect) {
  check_bounds(p, b);
  const Lattice lat{p.n(), p.l()};
  const i64 bound = b.max_component;
  const i64 rows = 2 * bound + 1;
  const i64 workers = std::clamp<i64>(jobs == 0 ? 1 : jobs, 1, rows);
  std::vector<PartialScan> parts(static_cast<std::size_t>(workers));
  auto work = [&](i64 w) {
    const i64 lo = -bound + rows * w / workers;
    const i64 hi = -bound + rows * (w + 1) / workers - 1;
    parts[static_cast<std::size_t>(w)] = scan_chunk(lat, bound, lo, hi, collect);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (i64 w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  return parts;
}

Rational to_rational(const std::pair<i128, i128>& s) {
  auto to_int = [](i128 v) {
    // Values stay below 2^100; split into two 64-bit halves.
    const bool neg = v < 0;
    if (neg) v = -v;
    Integer hi = to_integer(static_cast<i64>(v >> 62));
    Integer lo = to_integer(static_cast<i64>(v & ((i128(1) << 62) - 1)));
    Integer z = hi * (Integer(1) << 62) + lo;
    return neg ? Integer(-z) : z;
  };
  return make_rational(to_int(s.first), to_int(s.second));
}

}  // namespace

bool in_gamma(const MukaiVector& u, const SurfaceParams& p) {
  const MukaiVector v = distinguished_vector(p);
  const MukaiVector w = v - u;
  const Integer u2 = mukai_square(u, p);
  const Integer uv = mukai_pairing(u, v, p);
  return mukai_pairing(u, w, p) > 0 && u2 >= 0 && mukai_square(w, p) >= 0 &&
         uv * uv > mukai_square(v, p) * u2;
}

bool in_gamma_m(const MukaiVector& u, const SurfaceParams& p) {
  if (!in_gamma(u, p) || mukai_square(u, p) != 0) return false;
  const Integer d = mukai_pairing(u, distinguished_vector(p), p);
  return d == 1 || d == 2;
}

std::vector<MukaiVector> enumerate_gamma(const SurfaceParams& p,
                                         const EnumerationBounds& bounds,
                                         unsigned jobs) {
  std::vector<MukaiVector> out;
  for (auto& part : run_chunks(p, bounds, jobs, true)) {
    for (const auto& s : part.members) out.push_back(to_mukai(s));
  }
  return out;
}

GammaScan scan_gamma(const SurfaceParams& p, const EnumerationBounds& bounds,
                     unsigned jobs) {
  GammaScan out;
  std::optional<std::pair<i128, i128>> nef, mov;
  Small nef_u{}, mov_u{};
  for (auto& part : run_chunks(p, bounds, jobs, false)) {
    out.gamma_count += part.count;
    out.has_zero_slope_wall = out.has_zero_slope_wall || part.zero_wall;
    if (part.lemma_bad && !out.isotropic_counterexample) {
      out.isotropic_counterexample = to_mukai(*part.lemma_bad);
    }
    if (part.complement_bad && !out.complement_mismatch) {
      out.complement_mismatch = to_mukai(*part.complement_bad);
    }
    if (part.nef_slope && (!nef || less(*part.nef_slope, *nef))) {
      nef = part.nef_slope;
      nef_u = part.nef_u;
    }
    if (part.mov_slope && (!mov || less(*part.mov_slope, *mov))) {
      mov = part.mov_slope;
      mov_u = part.mov_u;
    }
  }
  if (nef) out.nef = WallWitness{to_rational(*nef), to_mukai(nef_u)};
  if (mov) out.movable = WallWitness{to_rational(*mov), to_mukai(mov_u)};
  return out;
}

Rational resolve_oracle_boundary(const std::optional<WallWitness>& found,
                                 const MukaiVector& predicted,
                                 const SurfaceParams& p,
                                 const EnumerationBounds& bounds) {
  const MukaiVector complement = distinguished_vector(p) - predicted;
  Integer reach = predicted.max_abs_component();
  if (complement.max_abs_component() < reach) {
    reach = complement.max_abs_component();
  }
  if (reach > bounds.max_component) {
    throw Error(ErrorCode::Incomplete,
                "boundary wall vector needs components up to " +
                    to_string(reach) + " > bound " +
                    std::to_string(bounds.max_component));
  }
  if (!found) {
    throw Error(ErrorCode::Incomplete, "no positive-slope wall in the box");
  }
  return found->slope;
}

OracleBoundary oracle_nef_boundary(std::int64_t n,
                                   const EnumerationBounds& bounds,
                                   unsigned jobs) {
  const SurfaceParams p(n, 3);
  if (is_trivial_pell(p)) return {rational_sqrt_ratio(n, 3), std::nullopt};
  const auto predicted = nef_boundary_table(n);
  const GammaScan scan = scan_gamma(p, bounds, jobs);
  const Rational slope =
      resolve_oracle_boundary(scan.nef, predicted.wall->u, p, bounds);
  return {slope, scan.nef->u};
}

OracleBoundary oracle_movable_boundary(const SurfaceParams& p,
                                       const EnumerationBounds& bounds,
                                       unsigned jobs) {
  if (is_trivial_pell(p)) {
    throw Error(ErrorCode::TrivialPell,
                "movable oracle requires l*n not to be a square");
  }
  const auto predicted = movable_boundary_general(p.n(), p.l());
  const GammaScan scan = scan_gamma(p, bounds, jobs);
  const Rational slope =
      resolve_oracle_boundary(scan.movable, predicted.wall->u, p, bounds);
  return {slope, scan.movable->u};
}

std::vector<PellSolution> brute_pell(const SurfaceParams& p,
                                     const Integer& x_max) {
  std::vector<PellSolution> out;
  const Integer n = p.n_int(), l = p.l_int();
  for (Integer x = 0; x <= x_max; ++x) {
    const Integer rhs = l + n * x * x;
    if (!divides(l, rhs)) continue;
    const Integer y2 = exact_div(rhs, l);
    if (!is_perfect_square(y2)) continue;
    out.push_back(PellSolution{x, isqrt(y2), out.size()});
  }
  return out;
}

bool verify_lemma_isotropic(const SurfaceParams& p,
                            const EnumerationBounds& bounds, unsigned jobs) {
  if (p.l() > 4) {
    throw Error(ErrorCode::InvalidArgument,
                "the isotropic reduction is only claimed for l <= 4");
  }
  return !scan_gamma(p, bounds, jobs).isotropic_counterexample;
}

}  // namespace kummer
