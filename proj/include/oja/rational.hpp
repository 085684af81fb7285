#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oja {

/// Exact rational number. GMP keeps values canonical after every arithmetic
/// operation; values built from a numerator/denominator pair go through
/// make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long p, long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(fl);
  return out;
}

inline Integer floor_of(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return fl;
}

/// Always "p/q", also for integers ("3/1", "0/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_short_string(const Rational& r) { return r.get_str(); }

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

}  // namespace oja
