#ifndef ORBIKIT_RATIONAL_HPP
#define ORBIKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "orbikit/errors.hpp"

namespace orbikit {

// Exact rational scalar.  GMP keeps values canonical: lowest terms,
// positive denominator, 0 represented as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

// Largest integer <= q.
inline Integer rat_floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

// Representative of q mod 1 in [0, 1).
inline Rational rat_mod1(const Rational& q) {
  Rational r = q - Rational(rat_floor(q));
  r.canonicalize();
  return r;
}

// Canonical "p/q" rendering, q >= 1 always present.
inline std::string rat_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q".
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q{Integer(s)};
      q.canonicalize();
      return q;
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in rational literal: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational literal: " + s);
  }
}

}  // namespace orbikit

#endif
