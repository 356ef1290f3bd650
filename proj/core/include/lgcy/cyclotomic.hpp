#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "lgcy/rational.hpp"

namespace lgcy {

class PrecComplex;

// Q(ξ_D) as Q[x]/Φ_D(x). Instances are shared and immutable; CycField::of is
// safe to call from several threads.
class CycField {
 public:
  static std::shared_ptr<const CycField> of(unsigned order);

  unsigned order() const { return order_; }
  unsigned degree() const { return phi_; }
  const std::vector<Integer>& cyclotomic_poly() const { return poly_; }

  // Reduced representative of x^k for any integer k.
  const std::vector<Rational>& power(long k) const;

  // Reduces a coefficient vector of any length modulo Φ_D, in place.
  void reduce(std::vector<Rational>& p) const;

  explicit CycField(unsigned order);

 private:
  unsigned order_;
  unsigned phi_;
  std::vector<Integer> poly_;                 // monic, size phi_ + 1
  std::vector<std::vector<Rational>> pow_;    // x^k mod Φ_D, 0 <= k < order_
};

std::vector<Integer> cyclotomic_polynomial(unsigned order);

// Element of a cyclotomic field, stored reduced modulo Φ_D so that equality is
// coefficient-wise. A null field means the value is rational.
class CycNum {
 public:
  CycNum() : c_{Rational(0)} {}
  CycNum(long v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& v) : c_{v} {}  // NOLINT(google-explicit-constructor)

  // ξ_order^k.
  static CycNum root_of_unity(unsigned order, long k);
  // Element Σ coeffs[i] ξ^i of the group ring Q[x]/(x^order - 1).
  static CycNum from_group_ring(unsigned order, const std::vector<Rational>& coeffs);

  unsigned order() const { return field_ ? field_->order() : 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_rational() const { return !field_; }
  const Rational& rational_value() const;

  CycNum lifted(unsigned order) const;
  CycNum conj() const;
  CycNum inverse() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  PrecComplex evaluate(int digits) const;
  std::string to_string() const;

 private:
  CycNum(std::shared_ptr<const CycField> f, std::vector<Rational> c);
  void normalize();
  static void unify(CycNum& a, CycNum& b);

  std::shared_ptr<const CycField> field_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

inline bool scalar_is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum scalar_inverse(const CycNum& x) { return x.inverse(); }
inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
Rational scalar_inverse(const Rational& x);

}  // namespace lgcy
