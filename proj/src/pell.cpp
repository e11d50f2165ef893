#include "kummer/pell.hpp"

#include <string>

#include "kummer/error.hpp"

namespace kummer {

SurfaceParams::SurfaceParams(std::int64_t n, std::int64_t l) : n_(n), l_(l) {
  if (n < 1 || n > kMaxParameter) {
    throw Error(ErrorCode::InvalidArgument,
                "n must lie in [1, " + std::to_string(kMaxParameter) +
                    "], got " + std::to_string(n));
  }
  if (l < 3 || l > kMaxParameter) {
    throw Error(ErrorCode::InvalidArgument,
                "l must lie in [3, " + std::to_string(kMaxParameter) +
                    "], got " + std::to_string(l));
  }
}

std::int64_t SurfaceParams::m() const {
  if (!n_divisible_by_3()) {
    throw Error(ErrorCode::InvalidArgument,
                "m = n/3 is undefined for n = " + std::to_string(n_));
  }
  return n_ / 3;
}

PellUnit fundamental_unit(const Integer& d) {
  if (d <= 0 || is_perfect_square(d)) {
    throw Error(ErrorCode::TrivialPell,
                "y^2 - d*w^2 = 1 has only trivial solutions for d = " +
                    to_string(d));
  }
  // Convergents p/q of sqrt(d) = [a0; a1, a2, ...]; the first one with
  // p^2 - d*q^2 = 1 is the fundamental solution.
  const Integer a0 = isqrt(d);
  Integer m = 0;
  Integer den = 1;
  Integer a = a0;
  Integer p_prev = 1, p = a0;
  Integer q_prev = 0, q = 1;
  while (p * p - d * q * q != 1) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return {q, p};
}

bool is_trivial_pell(const SurfaceParams& p) {
  return is_perfect_square(p.n_int() * p.l_int());
}

namespace {

// Smallest t > 0 with l | n*t^2. Every solution of l*Y^2 - n*X^2 = l has
// t | X, and with X = t*W the equation becomes Y^2 - (n*t^2/l)*W^2 = 1.
Integer minimal_x_step(const SurfaceParams& p) {
  Integer rest = p.l_int() / igcd(p.l_int(), p.n_int());
  Integer t = 1;
  for (Integer f = 2; f * f <= rest; ++f) {
    int e = 0;
    while (divides(f, rest)) {
      rest /= f;
      ++e;
    }
    for (int i = 0; i < (e + 1) / 2; ++i) t *= f;
  }
  if (rest > 1) t *= rest;
  return t;
}

}  // namespace

PellEquation::PellEquation(const SurfaceParams& p) : params_(p) {
  if (is_trivial_pell(p)) {
    throw Error(ErrorCode::TrivialPell,
                "l*n is a perfect square (n = " + std::to_string(p.n()) +
                    ", l = " + std::to_string(p.l()) +
                    "): only the solutions (0, +-1) exist");
  }
  const Integer t = minimal_x_step(p);
  const Integer reduced = exact_div(p.n_int() * t * t, p.l_int());
  const PellUnit unit = fundamental_unit(reduced);
  fundamental_ = PellSolution{t * unit.w, unit.y, 1};
  if (!satisfies(fundamental_.x, fundamental_.y)) {
    throw Error(ErrorCode::InternalError, "fundamental solution check failed");
  }
}

bool PellEquation::satisfies(const Integer& x, const Integer& y) const {
  const Integer l = params_.l_int();
  return l * y * y - params_.n_int() * x * x == l;
}

PellSolution PellEquation::next(const PellSolution& s) const {
  if (!satisfies(s.x, s.y)) {
    throw Error(ErrorCode::IntegrityError,
                "(" + to_string(s.x) + ", " + to_string(s.y) +
                    ") does not solve l*Y^2 - n*X^2 = l");
  }
  const Integer& x1 = fundamental_.x;
  const Integer& y1 = fundamental_.y;
  const Integer cross = params_.n_int() * x1 * s.x;
  if (!divides(params_.l_int(), cross)) {
    throw Error(ErrorCode::IntegrityError,
                "l does not divide n*X_1*X_k for X_k = " + to_string(s.x));
  }
  PellSolution out;
  out.x = y1 * s.x + x1 * s.y;
  out.y = y1 * s.y + exact_div(cross, params_.l_int());
  out.k = s.k + 1;
  return out;
}

std::vector<PellSolution> PellEquation::sequence(std::size_t count) const {
  std::vector<PellSolution> out;
  out.reserve(count + 1);
  out.push_back(PellSolution{0, 1, 0});
  for (std::size_t k = 0; k < count; ++k) out.push_back(next(out.back()));
  return out;
}

PellSolution PellEquation::at(std::size_t k) const {
  PellSolution s{0, 1, 0};
  for (std::size_t i = 0; i < k; ++i) s = next(s);
  return s;
}

PellSolution fundamental_solution(const SurfaceParams& p) {
  return PellEquation(p).fundamental();
}

PellSolution next_solution(const SurfaceParams& p, const PellSolution& s) {
  return PellEquation(p).next(s);
}

std::vector<PellSolution> solution_sequence(const SurfaceParams& p,
                                            std::size_t count) {
  return PellEquation(p).sequence(count);
}

PellUnit fundamental_divisible_solution(const SurfaceParams& p) {
  if (is_trivial_pell(p)) {
    throw Error(ErrorCode::TrivialPell, "l*n is a perfect square");
  }
  return fundamental_unit(p.l_int() * p.n_int());
}

}  // namespace kummer
