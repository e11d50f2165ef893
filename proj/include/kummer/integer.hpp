#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kummer {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::int64_t v) {
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

inline bool is_perfect_square(const Integer& z) {
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline bool divides(const Integer& d, const Integer& z) {
  return mpz_divisible_p(z.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

inline Integer igcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer igcd(const Integer& a, const Integer& b, const Integer& c) {
  return igcd(igcd(a, b), c);
}

// Non-negative residue of z modulo m > 0.
inline Integer mod(const Integer& z, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Quotient that must be exact; callers check divisibility first.
inline Integer exact_div(const Integer& z, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), z.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Always "p/q", including integers ("2/1") and zero ("0/1").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Short human form: "2", "1/2".
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(const Integer& num, const Integer& den);

// Parses "p/q" or "p"; throws Error(InvalidArgument) on malformed input.
Rational parse_rational(const std::string& text);

Integer parse_integer(const std::string& text);

}  // namespace kummer
