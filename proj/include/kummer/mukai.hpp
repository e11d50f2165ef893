#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>

#include "kummer/integer.hpp"
#include "kummer/pell.hpp"

namespace kummer {

// (r, c*H, a) in the algebraic Mukai lattice Z + Z*H + Z.
struct MukaiVector {
  Integer r;
  Integer c;
  Integer a;

  bool is_primitive() const { return igcd(r, c, a) == 1; }
  Integer max_abs_component() const;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend MukaiVector operator-(const MukaiVector& x, const MukaiVector& y) {
    return {x.r - y.r, x.c - y.c, x.a - y.a};
  }
  friend MukaiVector operator-(const MukaiVector& x) {
    return {-x.r, -x.c, -x.a};
  }
};

std::ostream& operator<<(std::ostream& os, const MukaiVector& u);

// v = (1, 0, -l), the Mukai vector of the ideal sheaf of l points.
MukaiVector distinguished_vector(const SurfaceParams& p);

// p*h + q*delta in NS(Km^{l-1}(A)).
struct NSVector {
  Integer p;
  Integer q;

  friend bool operator==(const NSVector&, const NSVector&) = default;
};

// <x, y> = 2n*c_x*c_y - r_x*a_y - a_x*r_y.
Integer mukai_pairing(const MukaiVector& x, const MukaiVector& y,
                      const SurfaceParams& p);
Integer mukai_square(const MukaiVector& x, const SurfaceParams& p);

// Beauville-Bogomolov form: h^2 = 2n, delta^2 = -2l, (h, delta) = 0.
Integer bb_pairing(const NSVector& w, const NSVector& w2,
                   const SurfaceParams& p);

// v^perp -> Zh + Z delta, (0,H,0) -> h and (1,0,l) -> delta.
// Throws NotOrthogonal unless a = l*r.
NSVector theta_v(const MukaiVector& w, const SurfaceParams& p);
MukaiVector theta_v_inverse(const NSVector& w, const SurfaceParams& p);

bool in_positive_cone(const NSVector& w, const SurfaceParams& p);

// A primitive isotropic vector u with (2l/d)*u = v + X*h + Y*delta.
struct WallVectorReport {
  MukaiVector u;
  std::int64_t d = 0;  // <u, v>
  std::int64_t g = 0;  // content of v + X*h + Y*delta, d*g = 2l
  Integer source_x;    // signed Pell solution that produced u
  Integer source_y;
};

// Reports for the signs +(X, Y) and -(X, Y), in that order.
std::array<WallVectorReport, 2> wall_vectors_from_solution(
    const Integer& x, const Integer& y, const SurfaceParams& p);

// The report with the smallest d <= max_d (the + sign wins ties), if any.
std::optional<WallVectorReport> admissible_wall_vector(
    const Integer& x, const Integer& y, const SurfaceParams& p,
    std::int64_t max_d);

// Q >= 0 with u^perp meeting the half plane {p > 0} of v^perp along
// h -+ Q*delta. Walls are symmetric under delta -> -delta (c -> -c is an
// isometry fixing v), so only |Q| is reported.
Rational wall_slope(const MukaiVector& u, const SurfaceParams& p);

}  // namespace kummer
