#pragma once

#include "lgcy/cyclotomic.hpp"
#include "lgcy/precision.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

// Uniform helpers over the three coefficient types (Rational, CycNum,
// PrecComplex) used by the generic containers.

inline Rational scalar_scale(const Rational& x, const Rational& r) { return x * r; }
inline CycNum scalar_scale(const CycNum& x, const Rational& r) { return x * CycNum(r); }
inline PrecComplex scalar_scale(const PrecComplex& x, const Rational& r) { return scale(x, r); }

template <class T>
T scalar_from_rational(const Rational& r, const T& like);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r, const Rational&) {
  return r;
}
template <>
inline CycNum scalar_from_rational<CycNum>(const Rational& r, const CycNum&) {
  return CycNum(r);
}
template <>
inline PrecComplex scalar_from_rational<PrecComplex>(const Rational& r, const PrecComplex& like) {
  mpfr_prec_t b = std::max<mpfr_prec_t>(like.bits(), 64);
  return {Real::from_rational(r, b), Real(Prec{b})};
}

inline PrecComplex to_complex(const Rational& x, int digits) { return PrecComplex::from_rational(x, digits); }
inline PrecComplex to_complex(const CycNum& x, int digits) { return x.evaluate(digits); }
inline PrecComplex to_complex(const PrecComplex& x, int) { return x; }

}  // namespace lgcy
