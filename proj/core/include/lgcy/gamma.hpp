#pragma once

#include <vector>

#include "lgcy/nilpoly.hpp"
#include "lgcy/precision.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

// Taylor coefficients of Γ(offset + x) at x = 0 through x^order, for
// 0 < offset ≤ 1. Results are memoized per (offset, order, digits).
std::vector<PrecComplex> gamma_taylor(const Rational& offset, int order, int digits);

// Γ(offset + s·H) in C[H]/(H^cap).
NilPoly<PrecComplex> gamma_nil(const Rational& offset, const Rational& s, int cap, int digits);

}  // namespace lgcy
