#pragma once

#include <mpfr.h>

#include <ostream>
#include <string>

#include "lgcy/rational.hpp"

namespace lgcy {

// Decimal digits to MPFR bits, with guard bits so that results printed or
// compared at `digits` are not affected by the last few roundings.
mpfr_prec_t digits_to_bits(int digits);

// Default working precision in decimal digits (50), overridable through the
// LGCY_PRECISION environment variable by the CLI.
constexpr int kDefaultDigits = 50;

// Tag for constructing a zero of a given precision.
struct Prec {
  mpfr_prec_t bits;
};

// RAII wrapper over mpfr_t. Every value carries its own precision; binary
// operations produce the larger of the two operand precisions.
class Real {
 public:
  Real();  // exact zero at minimal precision
  explicit Real(Prec p);
  Real(long v);  // NOLINT(google-explicit-constructor) exact small integer
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_rational(const Rational& r, mpfr_prec_t bits);
  static Real from_string(const std::string& s, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  static Real euler_gamma(mpfr_prec_t bits);
  static Real zeta(unsigned long s, mpfr_prec_t bits);
  static Real pow10(long e, mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

 private:
  mpfr_t v_;
};

Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real atan2(const Real& y, const Real& x);
Real gamma(const Real& x);  // NaN at poles, as MPFR
Real max(const Real& a, const Real& b);

// Complex number with MPFR real and imaginary parts.
class PrecComplex {
 public:
  PrecComplex() = default;  // exact zero
  PrecComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  PrecComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  static PrecComplex zero(int digits);
  static PrecComplex from_rational(const Rational& r, int digits);
  static PrecComplex from_parts(const Rational& re, const Rational& im, int digits);
  // exp(2πi k / n)
  static PrecComplex root_of_unity(long k, long n, int digits);
  static PrecComplex i_pi(int digits);      // πi
  static PrecComplex two_pi_i(int digits);  // 2πi

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t bits() const { return std::max(re_.bits(), im_.bits()); }

  PrecComplex& operator+=(const PrecComplex& o);
  PrecComplex& operator-=(const PrecComplex& o);
  PrecComplex& operator*=(const PrecComplex& o);
  PrecComplex& operator/=(const PrecComplex& o);
  PrecComplex operator-() const { return {-re_, -im_}; }

  friend PrecComplex operator+(PrecComplex a, const PrecComplex& b) { return a += b; }
  friend PrecComplex operator-(PrecComplex a, const PrecComplex& b) { return a -= b; }
  friend PrecComplex operator*(PrecComplex a, const PrecComplex& b) { return a *= b; }
  friend PrecComplex operator/(PrecComplex a, const PrecComplex& b) { return a /= b; }

  PrecComplex conj() const { return {re_, -im_}; }
  Real abs() const;
  bool is_exact_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string(int digits) const;

 private:
  Real re_;
  Real im_;
};

PrecComplex exp(const PrecComplex& z);
// Principal branch.
PrecComplex log(const PrecComplex& z);
// exp(w * log_base) where log_base is an explicitly chosen logarithm of the base.
PrecComplex pow_with_log(const PrecComplex& log_base, const PrecComplex& w);
PrecComplex scale(const PrecComplex& z, const Rational& r);

std::ostream& operator<<(std::ostream& os, const PrecComplex& z);

inline bool scalar_is_zero(const PrecComplex& x) { return x.is_exact_zero(); }
PrecComplex scalar_inverse(const PrecComplex& x);

}  // namespace lgcy
