#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kummer/integer.hpp"
#include "kummer/mukai.hpp"
#include "kummer/pell.hpp"

namespace kummer {

// Primitive (p, q) with p >= 0, standing for the ray R>=0 (p*h + q*delta).
struct Ray {
  Integer p;
  Integer q;

  friend bool operator==(const Ray&, const Ray&) = default;
};

// The ray h - slope*delta, slope >= 0.
Ray ray_for_slope(const Rational& slope);

// Rays ordered by decreasing q/p; left = h for nef and movable cones.
struct Cone {
  Ray left;
  Ray right;

  friend bool operator==(const Cone&, const Cone&) = default;
};

// Cone spanned by h and h - slope*delta.
Cone cone_from_h(const Rational& slope);

struct BoundaryReport {
  Cone cone;
  Rational boundary_slope;
  // Absent exactly when l*n is a perfect square.
  std::optional<WallVectorReport> wall;
  std::optional<std::size_t> pell_index;
};

// Rows of the classification table for Km^2(A).
enum class TableRow {
  NotDivisibleBy3,  // 3 does not divide n
  X1DivisibleBy3,   // n = 3m, m not a square, 3 | X_1
  X1EvenY1DivisibleBy3,
  X1EvenY1NotDivisibleBy3,
  X1OddY1DivisibleBy3,
  X1OddY1NotDivisibleBy3,
  MSquare,  // n = 3m with m a perfect square
};

const char* to_string(TableRow row) noexcept;

TableRow classify_km2(std::int64_t n);

// Pell indices (k_nef, k_mov) read off the table; both 0 for MSquare.
std::pair<std::size_t, std::size_t> table_indices(TableRow row);

// Largest <u, v> of a wall bounding the nef (3) or the movable (2) cone of
// Km^2(A).
inline constexpr std::int64_t kNefMaxPairing = 3;
inline constexpr std::int64_t kMovableMaxPairing = 2;

// Walks k = 1, 2, ... until some sign of (X_k, Y_k) gives a wall vector with
// <u, v> <= max_d. Throws InternalError past this index.
inline constexpr std::size_t kMaxWalkIndex = 8;

BoundaryReport nef_boundary_table(std::int64_t n);
BoundaryReport movable_boundary_table(std::int64_t n);
BoundaryReport nef_boundary_iterative(std::int64_t n);
BoundaryReport movable_boundary_iterative(std::int64_t n);

// Iterative result, checked against the table; InternalError on mismatch.
BoundaryReport nef_boundary_km2(std::int64_t n);
BoundaryReport movable_boundary_km2(std::int64_t n);

// Sufficient condition for Nef = Mov: 3 does not divide n, or n = 3 mod 9.
bool nef_equals_movable_criterion(std::int64_t n);

// The movable boundary is a Hilbert-Chow contraction: 2 | X_1, or 3 | n,
// X_1 = +-1 mod 6 and 3 | Y_1. Throws TrivialPell when 3n is a square.
bool hilbert_chow_movable_boundary_test(std::int64_t n);

// Y = -1 mod p for every odd prime p | n, and Y = -1 mod 4 when n is even.
bool lemma41_congruence_test(const Integer& y, std::int64_t n);

// Ways of writing +-u = (s*a^2, a*b*H, t*b^2) with s*t = n.
struct MukaiFactorization {
  std::int64_t s = 0;
  std::int64_t t = 0;
  Integer a;
  Integer b;
};
std::vector<MukaiFactorization> mukai_factorizations(const MukaiVector& u,
                                                     std::int64_t n);

enum class ModelKind { SelfModel, FlopModel, ModuliKummer };
enum class Isomorphism { Yes, No, Unknown };

const char* to_string(ModelKind kind) noexcept;
const char* to_string(Isomorphism iso) noexcept;

// Ample cone of a minimal model of Km^2(A) inside the movable cone.
struct Chamber {
  Cone cone;
  std::size_t index = 0;  // 1-based, ordered away from h
  ModelKind model = ModelKind::SelfModel;
  // ModuliKummer: the model is Km^2(M_H(u)).
  std::optional<MukaiVector> u;
  Isomorphism iso_to_original = Isomorphism::Unknown;
};

std::vector<Chamber> chamber_decomposition_km2(std::int64_t n,
                                               bool end_a_is_z);

// Movable cone of Km^{l-1}(A) from the fundamental solution of
// Y^2 - l*n*Z^2 = 1.
BoundaryReport movable_boundary_general(std::int64_t n, std::int64_t l);

// sqrt(n/l) as an exact rational; InvalidArgument unless l*n is a square.
Rational rational_sqrt_ratio(std::int64_t n, std::int64_t l);

}  // namespace kummer
