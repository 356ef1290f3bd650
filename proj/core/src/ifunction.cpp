#include "lgcy/ifunction.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <optional>
#include <sstream>

namespace lgcy {

LamPoly LamPoly::constant(int cap, const Rational& c) {
  LamPoly p(cap);
  p.add_term(0, NilPoly<Rational>::constant(cap, c));
  return p;
}

LamPoly LamPoly::linear(int cap, const Rational& a, const Rational& b) {
  LamPoly p(cap);
  p.add_term(1, NilPoly<Rational>::constant(cap, a));
  p.add_term(0, NilPoly<Rational>::monomial(cap, 1, b));
  return p;
}

void LamPoly::add_term(int a, const NilPoly<Rational>& p) {
  if (p.cap() != cap_) throw MathError("LamPoly cap mismatch");
  auto it = t_.find(a);
  if (it == t_.end()) {
    if (!p.is_zero()) t_.emplace(a, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) t_.erase(it);
}

Rational LamPoly::constant_term() const {
  auto it = t_.find(0);
  return it == t_.end() ? Rational(0) : it->second[0];
}

LamPoly& LamPoly::operator+=(const LamPoly& o) {
  for (const auto& [a, p] : o.t_) add_term(a, p);
  return *this;
}

LamPoly& LamPoly::operator-=(const LamPoly& o) {
  for (const auto& [a, p] : o.t_) add_term(a, -p);
  return *this;
}

LamPoly LamPoly::operator-() const {
  LamPoly r(cap_);
  for (const auto& [a, p] : t_) r.t_.emplace(a, -p);
  return r;
}

LamPoly operator*(const LamPoly& a, const LamPoly& b) {
  LamPoly r(a.cap_);
  for (const auto& [ea, pa] : a.t_)
    for (const auto& [eb, pb] : b.t_) r.add_term(ea + eb, pa * pb);
  return r;
}

LamPoly operator*(LamPoly a, const Rational& s) {
  if (s == 0) return LamPoly(a.cap_);
  for (auto& [e, p] : a.t_) p *= s;
  return a;
}

std::string lampoly_to_string(const LamPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [a, q] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + nilpoly_to_string(q) + ")";
    if (a == 1) s += "*L";
    if (a > 1) s += "*L^" + std::to_string(a);
  }
  return s;
}

std::string izpoly_to_string(const IZPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "[" + lampoly_to_string(c) + "]";
    if (k != 0) s += "*z^" + std::to_string(k);
  }
  return s;
}

long SeriesIndex::total() const {
  long t = k0;
  for (const auto& [g, k] : kvec) t += k;
  return t;
}

std::string series_index_to_string(const SymmetryGroup& G, const SeriesIndex& i) {
  std::ostringstream os;
  os << "k0=" << i.k0;
  for (const auto& [g, k] : i.kvec) os << " t[" << element_to_string(G.element(g)) << "]^" << k;
  return os.str();
}

std::vector<int> fixing_subset(const SymmetryGroup& G) {
  std::vector<int> out;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (G.fixed_rank(static_cast<int>(i)) > 0) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

void enumerate(const std::vector<int>& S, std::size_t pos, long budget, SeriesIndex& cur, std::vector<SeriesIndex>& out) {
  if (pos == S.size()) {
    for (long k0 = 0; k0 <= budget; ++k0) {
      cur.k0 = k0;
      out.push_back(cur);
    }
    cur.k0 = 0;
    return;
  }
  for (long k = 0; k <= budget; ++k) {
    if (k > 0) cur.kvec[S[pos]] = k;
    enumerate(S, pos + 1, budget - k, cur, out);
  }
  cur.kvec.erase(S[pos]);
}

IZPoly linear_factor(int cap, const Rational& alpha, const Rational& beta, const Rational& gamma) {
  IZPoly f;
  f.add(0, LamPoly::constant(cap, alpha));
  f.add(-1, LamPoly::linear(cap, beta, gamma));
  return f;
}

// 1/(α + γH/z) for α ≠ 0.
IZPoly inverse_factor(int cap, const Rational& alpha, const Rational& gamma) {
  if (alpha == 0) throw MathError("gamma ratio: inverted factor has zero constant term");
  IZPoly f;
  Rational c = 1 / alpha;
  const Rational r = -gamma / alpha;
  for (int n = 0; n < cap; ++n) {
    LamPoly p(cap);
    p.add_term(0, NilPoly<Rational>::monomial(cap, n, c));
    f.add(-n, p);
    c *= r;
  }
  return f;
}

IZPoly one(int cap) { return IZPoly::monomial(0, LamPoly::constant(cap, Rational(1))); }

Rational kvec_factorials(const SeriesIndex& i) {
  Rational f(1);
  for (const auto& [g, k] : i.kvec) f *= factorial(static_cast<unsigned>(k));
  return f;
}

template <class F>
std::vector<std::pair<SeriesIndex, std::optional<IFunctionTerm>>> compute_parallel(const std::vector<SeriesIndex>& idx,
                                                                                   int jobs, F f) {
  using Item = std::pair<SeriesIndex, std::optional<IFunctionTerm>>;
  std::vector<Item> out(idx.size());
  const std::size_t n = std::max(1, jobs);
  auto work = [&](std::size_t start) {
    for (std::size_t k = start; k < idx.size(); k += n) out[k] = {idx[k], f(idx[k])};
  };
  std::vector<std::future<void>> fut;
  for (std::size_t t = 1; t < n; ++t) fut.push_back(std::async(std::launch::async, work, t));
  work(0);
  for (auto& x : fut) x.get();
  return out;
}

}  // namespace

std::vector<SeriesIndex> series_indices(const SymmetryGroup& G, int order) {
  if (order < 0) throw MathError("series order must be nonnegative");
  std::vector<SeriesIndex> out;
  SeriesIndex cur;
  enumerate(fixing_subset(G), 0, order, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> a_vector(const SymmetryGroup& G, const SeriesIndex& i) {
  std::vector<Rational> a(static_cast<std::size_t>(G.model().n_vars()), Rational(0));
  for (const auto& [g, k] : i.kvec)
    for (int j = 0; j < G.model().n_vars(); ++j) a[static_cast<std::size_t>(j)] += G.m(g, j) * k;
  return a;
}

int target_sector(const SymmetryGroup& G, Side side, const SeriesIndex& i) {
  int h = G.pow(G.j(), side == Side::Minus ? i.k0 : -i.k0);
  for (const auto& [g, k] : i.kvec) h = G.mul(h, G.pow(g, k));
  return h;
}

IZPoly modification_factor(const SymmetryGroup& G, const SeriesIndex& i) {
  const LGModel& M = G.model();
  const auto a = a_vector(G, i);
  // p[u] is the coefficient of λ^u z^{deg-u}; every factor is linear and homogeneous.
  std::vector<Rational> p{Rational(1)};
  for (int j = 0; j < M.n_vars(); ++j) {
    const Rational x = M.q(j) * i.k0 + a[static_cast<std::size_t>(j)];
    const long n = to_long(floor_of(x));
    const Rational f = frac(x);
    const Rational cj(M.weights[static_cast<std::size_t>(j)]);
    for (long l = 0; l < n; ++l) {
      // times (-c_j λ - (f + l) z)
      const Rational zc = -(f + l);
      p.emplace_back(0);
      for (std::size_t u = p.size() - 1; u > 0; --u) p[u] = zc * p[u] - cj * p[u - 1];
      p[0] *= zc;
    }
  }
  const std::size_t deg = p.size() - 1;
  IZPoly r;
  for (std::size_t u = 0; u <= deg; ++u) {
    const Rational& c = p[u];
    if (sgn(c) == 0) continue;
    LamPoly lp(1);
    lp.add_term(static_cast<int>(u), NilPoly<Rational>::constant(1, c));
    r.add(static_cast<int>(deg - u), lp);
  }
  return r;
}

IZPoly gamma_ratio(const SymmetryGroup& G, const SeriesIndex& i, int cap) {
  const LGModel& M = G.model();
  const Rational d(M.degree);
  const auto a = a_vector(G, i);
  IZPoly r = one(cap);
  // Γ(1+x)/Γ(1+x-k0) = Π_{m=0}^{k0-1} (x - m), x = -d(λ+H)/z.
  for (long m = 0; m < i.k0; ++m) r = r * linear_factor(cap, Rational(-m), -d, -d);
  for (int j = 0; j < M.n_vars(); ++j) {
    const Rational cj(M.weights[static_cast<std::size_t>(j)]);
    const Rational e = M.q(j) * i.k0 - a[static_cast<std::size_t>(j)];
    const Rational f = frac(-e);
    const long n = to_long(floor_of(e + f));  // e + f = ⌈e⌉
    // Γ(1+y)/Γ(1+y+n) with y = c_j H/z - f.
    if (n >= 0) {
      for (long m = 1; m <= n; ++m) r = r * inverse_factor(cap, m - f, cj);
    } else {
      for (long m = 0; m < -n; ++m) r = r * linear_factor(cap, -f - m, Rational(0), cj);
    }
  }
  return r;
}

namespace {

Real gamma_cached(const Rational& x, mpfr_prec_t bits) {
  static std::mutex mu;
  static std::map<std::pair<std::string, mpfr_prec_t>, Real> cache;
  const auto key = std::make_pair(x.get_str(), bits);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Real v = Real::from_rational(x, bits);
  Real g(Prec{bits});
  mpfr_gamma(g.get(), v.get(), MPFR_RNDN);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, g);
  return g;
}

// 1/Γ(x), zero at the poles.
Real recip_gamma(const Rational& x, mpfr_prec_t bits) {
  if (is_integer(x) && sgn(x) <= 0) return Real(Prec{bits});
  return Real::from_rational(1, bits) / gamma_cached(x, bits);
}

Real gamma_real(const Rational& x, mpfr_prec_t bits) {
  if (is_integer(x) && sgn(x) <= 0) throw MathError("gamma pole in a numerator");
  return gamma_cached(x, bits);
}

}  // namespace

Real gamma_ratio_numeric(const SymmetryGroup& G, const SeriesIndex& i, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits);
  const LGModel& M = G.model();
  const auto a = a_vector(G, i);
  Real r = recip_gamma(Rational(1 - i.k0), bits);  // Γ(1) = 1
  for (int j = 0; j < M.n_vars(); ++j) {
    const Rational e = M.q(j) * i.k0 - a[static_cast<std::size_t>(j)];
    r *= gamma_real(1 - frac(-e), bits) * recip_gamma(1 + e, bits);
  }
  return r;
}

IFunctionSeries i_minus_series(const SymmetryGroup& G, int order, int jobs) {
  IFunctionSeries s{Side::Minus, order, "z t^(d L/z)", {}, {}};
  auto items = compute_parallel(series_indices(G, order), jobs, [&](const SeriesIndex& i) -> std::optional<IFunctionTerm> {
    const Rational denom = factorial(static_cast<unsigned>(i.k0)) * kvec_factorials(i);
    const int exponent = static_cast<int>(1 - i.total());
    IZPoly c = modification_factor(G, i).shifted(exponent).scaled(Rational(1 / denom));
    return IFunctionTerm{target_sector(G, Side::Minus, i), c};
  });
  for (auto& [i, t] : items) s.terms.emplace(i, *t);
  return s;
}

IFunctionSeries i_plus_series(const SymmetryGroup& G, int order, int jobs) {
  require_convex(G, Space::YPlus);
  const LGModel& M = G.model();
  IFunctionSeries s{Side::Plus, order, "z q^(H/z)", {}, {}};
  auto items = compute_parallel(series_indices(G, order), jobs, [&](const SeriesIndex& i) -> std::optional<IFunctionTerm> {
    const int h = target_sector(G, Side::Plus, i);
    const int cap = G.fixed_rank(h);
    if (cap == 0) return IFunctionTerm{h, IZPoly()};  // 1̃_h = 0 on an empty sector
    const auto a = a_vector(G, i);
    Rational e = 1 - i.k0 * (M.sum_q() - 1);
    for (const auto& [g, k] : i.kvec) e += (G.age(g) - 1) * k;
    e -= G.age(h);
    if (!is_integer(e)) throw MathError("I^{Y+}: non-integral z exponent at " + series_index_to_string(G, i));
    const Rational denom = kvec_factorials(i);
    IZPoly c = gamma_ratio(G, i, cap).shifted(static_cast<int>(to_long(e.get_num()))).scaled(Rational(1 / denom));
    return IFunctionTerm{h, c};
  });
  for (auto& [i, t] : items) {
    if (!t->coeff.is_zero()) {
      Rational literal(0), homogeneous(0);
      const auto a = a_vector(G, i);
      for (int j = 0; j < M.n_vars(); ++j) {
        const Rational x = M.q(j) * i.k0 - a[static_cast<std::size_t>(j)];
        literal += frac(x);
        homogeneous += frac(-x);
      }
      if (literal != homogeneous) s.exponent_flags.push_back(i);
    }
    s.terms.emplace(i, *t);
  }
  return s;
}

CheckReport verify_degree_homogeneity(const SymmetryGroup& G, const IFunctionSeries& s) {
  CheckReport rep{s.side == Side::Minus ? "degree-homogeneity-minus" : "degree-homogeneity-plus", true, 0, {}, "", {}};
  const Rational sq = G.model().sum_q();
  for (const auto& [i, t] : s.terms) {
    Rational mono = (s.side == Side::Minus ? Rational(1 - sq) : Rational(sq - 1)) * i.k0;
    for (const auto& [g, k] : i.kvec) mono += (1 - G.age(g)) * k;
    const Rational base = mono + G.age(t.sector);
    for (const auto& [b, lp] : t.coeff.terms())
      for (const auto& [a, p] : lp.terms())
        for (int c = 0; c < p.cap(); ++c) {
          if (p[c] == 0) continue;
          ++rep.cases;
          Rational deg = base + a + b + c;
          if (deg != 1)
            rep.fail(series_index_to_string(G, i) + ": term L^" + std::to_string(a) + " z^" + std::to_string(b) +
                     " H^" + std::to_string(c) + " has degree " + deg.get_str());
        }
  }
  return rep;
}

CheckReport verify_i_minus_leading(const SymmetryGroup& G, const IFunctionSeries& s) {
  CheckReport rep{"i-minus-leading", true, 0, {}, "", {}};
  if (s.side != Side::Minus) throw MathError("leading-term check applies to I^{Y-}");
  for (const auto& [i, t] : s.terms) {
    if (i.total() > 1) continue;
    ++rep.cases;
    int expect_sector;
    IZPoly expect;
    if (i.total() == 0) {
      expect_sector = G.identity();
      expect = IZPoly::monomial(1, LamPoly::constant(1, Rational(1)));
    } else {
      expect_sector = i.k0 == 1 ? G.j() : i.kvec.begin()->first;
      expect = IZPoly::monomial(0, LamPoly::constant(1, Rational(1)));
    }
    if (t.sector != expect_sector || t.coeff != expect)
      rep.fail(series_index_to_string(G, i) + ": got " + izpoly_to_string(t.coeff) + " at sector " +
               element_to_string(G.element(t.sector)));
  }
  return rep;
}

CheckReport verify_gamma_ratios(const SymmetryGroup& G, int order, int digits, const Real& tol) {
  CheckReport rep{"gamma-ratio-numeric", true, 0, {}, "", {}};
  Real worst = Real::from_rational(0, digits_to_bits(digits));
  for (const auto& i : series_indices(G, order)) {
    const IZPoly exact = gamma_ratio(G, i, 1);
    const LamPoly* c0 = exact.coefficient(0);
    const Rational v = c0 ? c0->constant_term() : Rational(0);
    Real dev = abs(Real::from_rational(v, digits_to_bits(digits)) - gamma_ratio_numeric(G, i, digits));
    worst = max(worst, dev);
    ++rep.cases;
    if (dev > tol) rep.fail(series_index_to_string(G, i) + ": exact " + v.get_str() + ", deviation " + dev.to_string(6));
  }
  rep.max_deviation = worst.to_string(6);
  return rep;
}

std::vector<DualBasisEntry> twisted_dual_basis(const SymmetryGroup& G) {
  std::vector<DualBasisEntry> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    DualBasisEntry e{g, G.inv(g), Integer(static_cast<long>(G.size())), G.fixed_coords(g)};
    if (e.lambda_of.size() % 2 == 1) e.scale = -e.scale;
    out.push_back(e);
  }
  return out;
}

PrecComplex dual_coefficient(const DualBasisEntry& e, const std::vector<PrecComplex>& lambdas, int digits) {
  PrecComplex c = PrecComplex::from_rational(Rational(e.scale), digits);
  for (int k : e.lambda_of) c *= lambdas.at(static_cast<std::size_t>(k));
  return c;
}

Specialization s_specialization(const PrecComplex& lambda, int order, int digits) {
  if (lambda.abs().is_zero()) throw MathError("specialization needs a nonzero equivariant weight");
  Specialization sp{lambda, {}};
  const PrecComplex one = PrecComplex::from_rational(1, digits);
  sp.s.push_back(log(-(one / lambda)));
  PrecComplex inv_pow = one;
  for (int k = 1; k <= order; ++k) {
    inv_pow = inv_pow / lambda;
    sp.s.push_back(inv_pow * PrecComplex::from_rational(factorial(static_cast<unsigned>(k - 1)), digits));
  }
  return sp;
}

Real verify_specialization(const Specialization& sp, int cap, int digits) {
  if (static_cast<int>(sp.s.size()) < cap) throw MathError("specialization order below the nilpotency cap");
  // N = Σ_{k≥1} s_k x^k/k!
  NilPoly<PrecComplex> N(cap);
  for (int k = 0; k < cap; ++k) N[k] = PrecComplex::zero(digits);
  for (int k = 1; k < cap; ++k) N[k] = sp.s[static_cast<std::size_t>(k)] / PrecComplex::from_rational(factorial(static_cast<unsigned>(k)), digits);
  NilPoly<PrecComplex> term = NilPoly<PrecComplex>::constant(cap, PrecComplex::from_rational(1, digits));
  for (int k = 1; k < cap; ++k) term[k] = PrecComplex::zero(digits);
  NilPoly<PrecComplex> lhs = term;
  for (int n = 1; n < cap; ++n) {
    term = term * N;
    term *= PrecComplex::from_rational(Rational(1, n), digits);
    lhs += term;
  }
  lhs *= exp(sp.s[0]);
  NilPoly<PrecComplex> et = NilPoly<PrecComplex>::constant(cap, -sp.lambda);
  for (int k = 1; k < cap; ++k) et[k] = PrecComplex::zero(digits);
  if (cap > 1) et[1] = PrecComplex::from_rational(1, digits);
  NilPoly<PrecComplex> rhs = et.inverse();
  Real worst = Real::from_rational(0, digits_to_bits(digits));
  for (int k = 0; k < cap; ++k) worst = max(worst, (lhs[k] - rhs[k]).abs());
  return worst;
}

Rational convergence_constant(const LGModel& M) {
  Rational c(1);
  for (int i = 0; i < M.degree; ++i) c *= -M.degree;
  for (int w : M.weights)
    for (int i = 0; i < w; ++i) c /= w;
  return c;
}

}  // namespace lgcy
