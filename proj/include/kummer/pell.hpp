#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kummer/integer.hpp"

namespace kummer {

// Polarization data of the abelian surface and the dimension parameter of
// Km^{l-1}(A): H^2 = 2n and v = (1, 0, -l).
class SurfaceParams {
 public:
  // Largest accepted n and l. Keeps the bounded enumerations of the oracle
  // comfortably inside 64-bit intermediates.
  static constexpr std::int64_t kMaxParameter = 1'000'000;

  SurfaceParams(std::int64_t n, std::int64_t l = 3);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t l() const noexcept { return l_; }
  Integer n_int() const { return to_integer(n_); }
  Integer l_int() const { return to_integer(l_); }

  bool n_divisible_by_3() const noexcept { return n_ % 3 == 0; }
  // m = n / 3; throws InvalidArgument unless 3 | n.
  std::int64_t m() const;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;

 private:
  std::int64_t n_;
  std::int64_t l_;
};

// A solution of l*Y^2 - n*X^2 = l with its index in the sequence
// Y_k + X_k*sqrt(n/l) = (Y_1 + X_1*sqrt(n/l))^k.
struct PellSolution {
  Integer x;
  Integer y;
  std::size_t k = 0;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// Minimal positive solution (w, y) of y^2 - d*w^2 = 1.
struct PellUnit {
  Integer w;
  Integer y;
};

// Continued-fraction expansion of sqrt(d). Requires d > 0 not a square.
PellUnit fundamental_unit(const Integer& d);

bool is_trivial_pell(const SurfaceParams& p);

// The equation l*Y^2 - n*X^2 = l together with its fundamental solution.
class PellEquation {
 public:
  explicit PellEquation(const SurfaceParams& p);

  const SurfaceParams& params() const noexcept { return params_; }
  const PellSolution& fundamental() const noexcept { return fundamental_; }

  // Multiplication by the fundamental unit; asserts l | n*X_1*X_k.
  PellSolution next(const PellSolution& s) const;

  // [(X_0, Y_0), ..., (X_count, Y_count)].
  std::vector<PellSolution> sequence(std::size_t count) const;

  PellSolution at(std::size_t k) const;

  bool satisfies(const Integer& x, const Integer& y) const;

 private:
  SurfaceParams params_;
  PellSolution fundamental_;
};

PellSolution fundamental_solution(const SurfaceParams& p);
PellSolution next_solution(const SurfaceParams& p, const PellSolution& s);
std::vector<PellSolution> solution_sequence(const SurfaceParams& p,
                                            std::size_t count);

// Minimal positive solution (Z_1, Y_1) of Y^2 - l*n*Z^2 = 1, i.e. the
// solutions of l*Y^2 - n*X^2 = l with X = l*Z.
PellUnit fundamental_divisible_solution(const SurfaceParams& p);

}  // namespace kummer
