#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modschwarz {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q" form, used for every serialized rational (integers become "k/1").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "k".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: malformed '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// floor(r) as a signed integer; callers use it for small offsets only.
inline long floor_to_long(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor_to_long: out of range");
  return q.get_si();
}

}  // namespace modschwarz
