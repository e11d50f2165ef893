#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kummer/integer.hpp"
#include "kummer/mukai.hpp"
#include "kummer/pell.hpp"

namespace kummer {

inline constexpr std::int64_t kDefaultMaxComponent = 2048;

// Enumeration box |r|, |c|, |a| <= max_component.
struct EnumerationBounds {
  std::int64_t max_component = kDefaultMaxComponent;
};

// The four defining inequalities of Gamma, evaluated directly:
// <u, v-u> > 0, u^2 >= 0, (v-u)^2 >= 0, <v, u>^2 > v^2 u^2.
bool in_gamma(const MukaiVector& u, const SurfaceParams& p);
// Gamma_m: u in Gamma, u^2 = 0 and <u, v> in {1, 2}.
bool in_gamma_m(const MukaiVector& u, const SurfaceParams& p);

// Every u in Gamma inside the box, ordered by (r, c, a).
std::vector<MukaiVector> enumerate_gamma(const SurfaceParams& p,
                                         const EnumerationBounds& bounds,
                                         unsigned jobs = 1);

struct WallWitness {
  Rational slope;
  MukaiVector u;
};

// One pass over Gamma in the box. Walls are located from scratch by solving
// <u, q*(1,0,l) + p*(0,H,0)> = 0; only walls meeting the positive cone count.
struct GammaScan {
  std::size_t gamma_count = 0;
  std::optional<WallWitness> nef;      // smallest positive slope, Gamma
  std::optional<WallWitness> movable;  // smallest positive slope, Gamma_m
  bool has_zero_slope_wall = false;
  // First u with neither u nor v - u isotropic of pairing in (0, l].
  std::optional<MukaiVector> isotropic_counterexample;
  // First u with (v-u)^2 = 0 whose wall differs from that of v - u.
  std::optional<MukaiVector> complement_mismatch;
};

// Workers split the r range and share nothing; the merged result does not
// depend on jobs.
GammaScan scan_gamma(const SurfaceParams& p, const EnumerationBounds& bounds,
                     unsigned jobs = 1);

struct OracleBoundary {
  Rational slope;
  std::optional<MukaiVector> witness;
};

// Smallest positive wall slope, provided the predicted boundary vector lies
// inside the box; throws Incomplete otherwise.
Rational resolve_oracle_boundary(const std::optional<WallWitness>& found,
                                 const MukaiVector& predicted,
                                 const SurfaceParams& p,
                                 const EnumerationBounds& bounds);

// l = 3. Returns sqrt(n/3) without enumerating when 3n is a square.
OracleBoundary oracle_nef_boundary(std::int64_t n,
                                   const EnumerationBounds& bounds,
                                   unsigned jobs = 1);

// Any l >= 3; TrivialPell when l*n is a square.
OracleBoundary oracle_movable_boundary(const SurfaceParams& p,
                                       const EnumerationBounds& bounds,
                                       unsigned jobs = 1);

// Ascending scan of X = 0..x_max for l*Y^2 - n*X^2 = l with Y > 0.
std::vector<PellSolution> brute_pell(const SurfaceParams& p,
                                     const Integer& x_max);

// Requires l <= 4.
bool verify_lemma_isotropic(const SurfaceParams& p,
                            const EnumerationBounds& bounds,
                            unsigned jobs = 1);

}  // namespace kummer
