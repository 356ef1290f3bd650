#include "lgcy/nilpoly.hpp"

namespace lgcy {

NilPoly<Rational> todd_linear(int cap, const Rational& a) {
  // (1 - e^{-aH}) / (aH) = Σ_{n≥0} (-a)^n H^n / (n+1)!
  NilPoly<Rational> den(cap);
  Rational pw(1);
  for (int n = 0; n < cap; ++n) {
    den[n] = pw / factorial(static_cast<unsigned>(n + 1));
    pw *= -a;
  }
  return den.inverse();
}

}  // namespace lgcy
