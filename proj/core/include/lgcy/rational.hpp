#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lgcy {

// mpq_class keeps numerator/denominator reduced with a positive denominator
// after canonicalize(); every constructor below returns canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace lgcy
