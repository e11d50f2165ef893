#include "kummer/mukai.hpp"

#include "kummer/error.hpp"

namespace kummer {

namespace {

Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace

Integer MukaiVector::max_abs_component() const {
  Integer m = abs_value(r);
  if (abs_value(c) > m) m = abs_value(c);
  if (abs_value(a) > m) m = abs_value(a);
  return m;
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& u) {
  return os << '(' << u.r << ", " << u.c << ", " << u.a << ')';
}

MukaiVector distinguished_vector(const SurfaceParams& p) {
  return {1, 0, -p.l_int()};
}

Integer mukai_pairing(const MukaiVector& x, const MukaiVector& y,
                      const SurfaceParams& p) {
  return 2 * p.n_int() * x.c * y.c - x.r * y.a - x.a * y.r;
}

Integer mukai_square(const MukaiVector& x, const SurfaceParams& p) {
  return mukai_pairing(x, x, p);
}

Integer bb_pairing(const NSVector& w, const NSVector& w2,
                   const SurfaceParams& p) {
  return 2 * p.n_int() * w.p * w2.p - 2 * p.l_int() * w.q * w2.q;
}

NSVector theta_v(const MukaiVector& w, const SurfaceParams& p) {
  if (w.a != p.l_int() * w.r) {
    throw Error(ErrorCode::NotOrthogonal,
                "vector is not orthogonal to v = (1, 0, -l)");
  }
  return {w.c, w.r};
}

MukaiVector theta_v_inverse(const NSVector& w, const SurfaceParams& p) {
  return {w.q, w.p, p.l_int() * w.q};
}

bool in_positive_cone(const NSVector& w, const SurfaceParams& p) {
  return bb_pairing(w, w, p) > 0 && 2 * p.n_int() * w.p > 0;
}

std::array<WallVectorReport, 2> wall_vectors_from_solution(
    const Integer& x, const Integer& y, const SurfaceParams& p) {
  const Integer l = p.l_int();
  std::array<WallVectorReport, 2> out;
  for (int i = 0; i < 2; ++i) {
    const int sign = i == 0 ? 1 : -1;
    const Integer sx = sign * x;
    const Integer sy = sign * y;
    const MukaiVector w{1 + sy, sx, l * (sy - 1)};
    const Integer g = igcd(w.r, w.c, w.a);
    // <w, v> = 2l, so the content divides 2l.
    if (g == 0 || !divides(g, 2 * l)) {
      throw Error(ErrorCode::IntegrityError,
                  "content of v + Xh + Y delta does not divide 2l");
    }
    auto& rep = out[i];
    rep.u = {exact_div(w.r, g), exact_div(w.c, g), exact_div(w.a, g)};
    rep.g = g.get_si();
    rep.d = 2 * p.l() / rep.g;
    rep.source_x = sx;
    rep.source_y = sy;
  }
  return out;
}

std::optional<WallVectorReport> admissible_wall_vector(
    const Integer& x, const Integer& y, const SurfaceParams& p,
    std::int64_t max_d) {
  std::optional<WallVectorReport> best;
  for (auto& rep : wall_vectors_from_solution(x, y, p)) {
    if (rep.d > max_d) continue;
    if (!best || rep.d < best->d) best = std::move(rep);
  }
  return best;
}

Rational wall_slope(const MukaiVector& u, const SurfaceParams& p) {
  // u = lambda*v + x*h + y*delta with lambda = <u,v>/(2l), x = c,
  // y = r - lambda; the wall is h - (n*x/(l*y)) delta.
  const Integer l = p.l_int();
  const Integer d = mukai_pairing(u, distinguished_vector(p), p);
  const Rational lambda = make_rational(d, 2 * l);
  const Rational x(u.c);
  const Rational y = Rational(u.r) - lambda;
  if (y == 0) {
    if (x == 0) {
      throw Error(ErrorCode::DegenerateWall, "u is proportional to v");
    }
    throw Error(ErrorCode::VerticalWall, "u^perp is the delta axis");
  }
  Rational q = Rational(p.n_int()) * x / (Rational(l) * y);
  q.canonicalize();
  return abs(q);
}

}  // namespace kummer
