#include "lgcy/precision.hpp"

#include <cmath>
#include <vector>

#include "lgcy/error.hpp"

namespace lgcy {

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw MathError("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Real::Real() {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_set_zero(v_, 1);
}

Real::Real(Prec p) {
  mpfr_init2(v_, p.bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
  mpfr_init2(v_, 64);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_rational(const Rational& r, mpfr_prec_t bits) {
  Real x(Prec{bits});
  mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
  return x;
}

Real Real::from_string(const std::string& s, mpfr_prec_t bits) {
  Real x(Prec{bits});
  if (mpfr_set_str(x.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw MathError("bad real literal: " + s);
  return x;
}

Real Real::pi(mpfr_prec_t bits) {
  Real x(Prec{bits});
  mpfr_const_pi(x.v_, MPFR_RNDN);
  return x;
}

Real Real::euler_gamma(mpfr_prec_t bits) {
  Real x(Prec{bits});
  mpfr_const_euler(x.v_, MPFR_RNDN);
  return x;
}

Real Real::zeta(unsigned long s, mpfr_prec_t bits) {
  Real x(Prec{bits});
  mpfr_zeta_ui(x.v_, s, MPFR_RNDN);
  return x;
}

Real Real::pow10(long e, mpfr_prec_t bits) {
  Real x(Prec{bits});
  mpfr_set_si(x.v_, 10, MPFR_RNDN);
  mpfr_pow_si(x.v_, x.v_, e, MPFR_RNDN);
  return x;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

namespace {
template <class Op>
Real& binary(Real& a, const Real& b, Op op) {
  mpfr_prec_t p = std::max(a.bits(), b.bits());
  if (a.bits() < p) mpfr_prec_round(a.get(), p, MPFR_RNDN);
  op(a.get(), a.get(), b.get(), MPFR_RNDN);
  return a;
}

template <class Op>
Real unary(const Real& x, Op op) {
  Real r(Prec{x.bits()});
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

Real& Real::operator+=(const Real& o) { return binary(*this, o, mpfr_add); }
Real& Real::operator-=(const Real& o) { return binary(*this, o, mpfr_sub); }
Real& Real::operator*=(const Real& o) { return binary(*this, o, mpfr_mul); }
Real& Real::operator/=(const Real& o) { return binary(*this, o, mpfr_div); }

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }

Real atan2(const Real& y, const Real& x) {
  Real r(Prec{std::max(x.bits(), y.bits())});
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

PrecComplex PrecComplex::zero(int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {Real(Prec{b}), Real(Prec{b})};
}

PrecComplex PrecComplex::from_rational(const Rational& r, int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {Real::from_rational(r, b), Real(Prec{b})};
}

PrecComplex PrecComplex::from_parts(const Rational& re, const Rational& im, int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {Real::from_rational(re, b), Real::from_rational(im, b)};
}

PrecComplex PrecComplex::root_of_unity(long k, long n, int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  long m = ((k % n) + n) % n;
  if (m == 0) return {Real::from_rational(1, b), Real(Prec{b})};
  if (2 * m == n) return {Real::from_rational(-1, b), Real(Prec{b})};
  if (4 * m == n) return {Real(Prec{b}), Real::from_rational(1, b)};
  if (4 * m == 3 * n) return {Real(Prec{b}), Real::from_rational(-1, b)};
  Real t = Real::pi(b) * Real::from_rational(make_rational(2 * m, n), b);
  return {cos(t), sin(t)};
}

PrecComplex PrecComplex::i_pi(int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {Real(Prec{b}), Real::pi(b)};
}

PrecComplex PrecComplex::two_pi_i(int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {Real(Prec{b}), Real::pi(b) * Real(2)};
}

PrecComplex& PrecComplex::operator+=(const PrecComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

PrecComplex& PrecComplex::operator-=(const PrecComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

PrecComplex& PrecComplex::operator*=(const PrecComplex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  Real i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

PrecComplex& PrecComplex::operator/=(const PrecComplex& o) {
  if (o.is_exact_zero()) throw MathError("complex division by zero");
  Real den = o.re_ * o.re_ + o.im_ * o.im_;
  Real r = (re_ * o.re_ + im_ * o.im_) / den;
  Real i = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Real PrecComplex::abs() const {
  Real r(Prec{bits()});
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

std::string PrecComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  std::string t = im_.to_string(digits);
  if (!t.empty() && t[0] == '-') return s + " - " + t.substr(1) + "i";
  return s + " + " + t + "i";
}

PrecComplex exp(const PrecComplex& z) {
  Real m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

PrecComplex log(const PrecComplex& z) {
  if (z.is_exact_zero()) throw MathError("log of zero");
  return {log(z.abs()), atan2(z.im(), z.re())};
}

PrecComplex pow_with_log(const PrecComplex& log_base, const PrecComplex& w) { return exp(w * log_base); }

PrecComplex scale(const PrecComplex& z, const Rational& r) {
  mpfr_prec_t b = z.bits();
  Real f = Real::from_rational(r, b);
  return {z.re() * f, z.im() * f};
}

std::ostream& operator<<(std::ostream& os, const PrecComplex& z) { return os << z.to_string(20); }

PrecComplex scalar_inverse(const PrecComplex& x) { return PrecComplex(1) / x; }

}  // namespace lgcy
