#include "lgcy/gamma.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lgcy/error.hpp"

namespace lgcy {

namespace {

using Series = std::vector<Real>;

// ln Γ(1 + y0 + x) through x^order, from
//   ln Γ(1+y) = -γ y + Σ_{k≥2} (-1)^k ζ(k) y^k / k,   |y0| ≤ 1/2.
Series log_gamma_shifted(const Rational& y0, int order, mpfr_prec_t bits) {
  Series out(static_cast<std::size_t>(order) + 1, Real(Prec{bits}));
  Real y = Real::from_rational(y0, bits);
  Real eps = Real::pow10(0, bits);
  mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(bits) - 8, MPFR_RNDN);

  // binom[n] * y^(k-n) is the x^n coefficient of (y0 + x)^k.
  auto add_power = [&](long k, const Real& coeff) {
    Real ypow = Real::from_rational(1, bits);
    std::vector<Real> ypows;
    ypows.reserve(static_cast<std::size_t>(k) + 1);
    for (long e = 0; e <= k; ++e) {
      ypows.push_back(ypow);
      ypow *= y;
    }
    Real largest(Prec{bits});
    for (int n = 0; n <= order && n <= k; ++n) {
      Real t = coeff * Real::from_rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(n)), bits) *
               ypows[static_cast<std::size_t>(k - n)];
      out[static_cast<std::size_t>(n)] += t;
      largest = max(largest, abs(t));
    }
    return largest;
  };

  Real g = -Real::euler_gamma(bits);
  add_power(1, g);
  bool zero_center = sgn(y0) == 0;
  for (long k = 2;; ++k) {
    if (zero_center && k > order) break;
    Real c = Real::zeta(static_cast<unsigned long>(k), bits) / Real(k);
    if (k % 2 == 1) c = -c;
    Real largest = add_power(k, c);
    if (!zero_center && k > order + 2 && largest < eps) break;
    if (k > 100000) throw MathError("gamma series failed to converge");
  }
  return out;
}

// exp of a power series.
Series series_exp(const Series& f, mpfr_prec_t bits) {
  std::size_t n = f.size();
  Series e(n, Real(Prec{bits}));
  e[0] = exp(f[0]);
  for (std::size_t m = 1; m < n; ++m) {
    Real s(Prec{bits});
    for (std::size_t k = 1; k <= m; ++k) s += Real(static_cast<long>(k)) * f[k] * e[m - k];
    e[m] = s / Real(static_cast<long>(m));
  }
  return e;
}

}  // namespace

std::vector<PrecComplex> gamma_taylor(const Rational& offset, int order, int digits) {
  if (sgn(offset) <= 0 || offset > 1) throw MathError("gamma_taylor offset must lie in (0, 1]");
  if (order < 0) throw MathError("gamma_taylor order must be nonnegative");

  static std::mutex mu;
  static std::map<std::tuple<std::string, int, int>, std::vector<PrecComplex>> memo;
  auto key = std::make_tuple(offset.get_str(), order, digits);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  mpfr_prec_t bits = digits_to_bits(digits) + 16;
  Series g;
  if (offset >= Rational(1, 2)) {
    g = series_exp(log_gamma_shifted(offset - 1, order, bits), bits);
  } else {
    // Γ(a + x) = Γ(1 + a + x) / (a + x)
    Series h = series_exp(log_gamma_shifted(offset, order, bits), bits);
    Real a = Real::from_rational(offset, bits);
    Series inv(h.size(), Real(Prec{bits}));
    Real p = Real::from_rational(1, bits) / a;
    for (std::size_t n = 0; n < inv.size(); ++n) {
      inv[n] = (n % 2 == 0) ? p : -p;
      p /= a;
    }
    g.assign(h.size(), Real(Prec{bits}));
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; i + j < h.size(); ++j) g[i + j] += h[i] * inv[j];
  }

  std::vector<PrecComplex> out;
  out.reserve(g.size());
  mpfr_prec_t out_bits = digits_to_bits(digits);
  for (auto& x : g) {
    Real r(Prec{out_bits});
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    out.emplace_back(std::move(r), Real(Prec{out_bits}));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, out);
  return out;
}

NilPoly<PrecComplex> gamma_nil(const Rational& offset, const Rational& s, int cap, int digits) {
  auto t = gamma_taylor(offset, cap - 1, digits);
  NilPoly<PrecComplex> p(cap);
  Rational pw(1);
  for (int k = 0; k < cap; ++k) {
    p[k] = scale(t[static_cast<std::size_t>(k)], pw);
    pw *= s;
  }
  return p;
}

}  // namespace lgcy
