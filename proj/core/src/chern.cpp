#include "lgcy/chern.hpp"

#include "lgcy/gamma.hpp"
#include "lgcy/matrix.hpp"

namespace lgcy {

namespace {

Space ch_target(Space s) { return s == Space::MF ? Space::FJRW : s; }

// Π_j (1 - e^{-2πi m_j(g)}).
CycNum koszul_factor(const SymmetryGroup& G, int g) {
  const unsigned d = static_cast<unsigned>(G.model().degree);
  CycNum p(1);
  for (int j = 0; j < G.model().n_vars(); ++j) p *= CycNum(1) - CycNum::root_of_unity(d, -G.coord_exponent(g, j));
  return p;
}

NilPoly<CycNum> pg_line_ch(const SymmetryGroup& G, const GammaCharacter& c, int g, int cap) {
  return exp_linear<CycNum>(cap, CycNum(Rational(c.k1))) * G.character_value(c.k1, c.zeta, g);
}

}  // namespace

CRVector<CycNum> orb_ch(const SymmetryGroup& G, const KClass& x) {
  const Space s = x.space;
  CRVector<CycNum> out{ch_target(s), {}};
  const long d = G.model().degree;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    switch (s) {
      case Space::BG:
      case Space::YMinus:
      case Space::MF: {
        if (s != Space::BG && !G.narrow(g)) continue;
        CycNum v(0);
        for (const auto& [c, n] : x.terms) v += G.character_value(c.k1, c.zeta, g) * CycNum(Rational(n));
        if (s != Space::BG) v *= koszul_factor(G, g);
        out.add(g, NilPoly<CycNum>::constant(1, v));
        break;
      }
      case Space::PG:
      case Space::YPlus:
      case Space::ZAmbient: {
        const int n = G.fixed_rank(g);
        if (n == 0) continue;
        NilPoly<CycNum> p(n);
        for (const auto& [c, m] : x.terms) p += pg_line_ch(G, c, g, n) * CycNum(Rational(m));
        if (s == Space::YPlus) {
          // ch(i⁰_* E) = ch(E) (1 - e^{dH})
          p *= NilPoly<CycNum>::constant(n, CycNum(1)) - exp_linear<CycNum>(n, CycNum(Rational(d)));
        }
        if (s == Space::ZAmbient) {
          if (n < 2) continue;
          p = p.truncated(n - 1);
        }
        out.add(g, p);
        break;
      }
      default:
        throw MathError("orb_ch: unsupported space " + space_name(s));
    }
  }
  return out;
}

bool same_class(const SymmetryGroup& G, const KClass& x, const KClass& y) {
  if (x.space != y.space) return false;
  return orb_ch(G, x) == orb_ch(G, y);
}

CRVector<CycNum> ch_koszul_minus(const SymmetryGroup& G, const GammaCharacter& twist) {
  CRVector<CycNum> out{Space::YMinus, {}};
  for (int g : G.narrow_elements())
    out.add(g, NilPoly<CycNum>::constant(1, G.character_value(twist.k1, twist.zeta, g) * koszul_factor(G, g)));
  return out;
}

CRVector<CycNum> ch_mf_koszul(const SymmetryGroup& G, const GammaCharacter& twist) {
  CRVector<CycNum> out = ch_koszul_minus(G, twist);
  out.space = Space::FJRW;
  return out;
}

ToddEuler todd_and_euler(const SymmetryGroup& G) {
  require_convex(G, Space::YPlus);
  const long d = G.model().degree;
  ToddEuler te{{Space::YPlus, {}}, {Space::YPlus, {}}};
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    const int n = G.fixed_rank(g);
    if (n == 0) continue;
    // (-dH)/(1 - e^{dH}) is the Todd class x/(1 - e^{-x}) at x = -dH.
    NilPoly<Rational> td = todd_linear(n, Rational(-d));
    te.todd.add(g, td.map([](const Rational& r) { return CycNum(r); }));
    te.euler.add(g, NilPoly<CycNum>::monomial(n, 1, CycNum(Rational(-d))));
  }
  return te;
}

CRVector<PrecComplex> to_numeric(const CRVector<CycNum>& v, int digits) {
  CRVector<PrecComplex> out{v.space, {}};
  for (const auto& [g, p] : v.comp) out.comp.emplace(g, p.map([&](const CycNum& c) { return c.evaluate(digits); }));
  return out;
}

CRVector<PrecComplex> gamma_class(const SymmetryGroup& G, Space s, int digits) {
  CRVector<PrecComplex> out{s, {}};
  const LGModel& M = G.model();
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    const int cap = sector_cap(G, s, g);
    if (cap == 0) continue;
    NilPoly<PrecComplex> p = NilPoly<PrecComplex>::constant(cap, PrecComplex::from_rational(1, digits));
    switch (s) {
      case Space::BG:
        break;
      case Space::YMinus:
      case Space::FJRW:
      case Space::MF:
        for (int j = 0; j < M.n_vars(); ++j) p *= gamma_nil(1 - G.m(g, j), 0, 1, digits);
        break;
      case Space::PG:
      case Space::YPlus:
      case Space::ZAmbient:
        for (int j = 0; j < M.n_vars(); ++j)
          p *= gamma_nil(1 - G.m(g, j), M.weights[static_cast<std::size_t>(j)], cap, digits);
        if (s == Space::YPlus) p *= gamma_nil(1, -M.degree, cap, digits);
        if (s == Space::ZAmbient) p *= gamma_nil(1, M.degree, cap, digits).inverse();
        break;
    }
    out.add(g, p);
  }
  return out;
}

namespace {

PrecComplex log_two_pi_i(int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {log(Real::pi(b) * Real(2)), Real::pi(b) / Real(2)};
}

PrecComplex cpow(const PrecComplex& log_base, const Rational& e) { return exp(scale(log_base, e)); }

Rational rho_coefficient(const SymmetryGroup& G, Space s) {
  const LGModel& M = G.model();
  switch (s) {
    case Space::PG: return Rational(M.sum_weights());
    case Space::YPlus:
    case Space::ZAmbient:
      return Rational(M.sum_weights() - M.degree);
    default: return Rational(0);
  }
}

}  // namespace

FlatFrameVector flat_frame(const SymmetryGroup& G, const KClass& x, const PrecComplex& log_z, int digits) {
  const Space s = ch_target(x.space);
  const bool gw = (s == Space::PG || s == Space::YPlus || s == Space::ZAmbient);
  const Rational chat = s == Space::BG ? Rational(0) : central_charge(G, s);
  const PrecComplex l2pi = log_two_pi_i(digits);
  CRVector<PrecComplex> ch = to_numeric(involution(G, orb_ch(G, x)), digits);
  CRVector<PrecComplex> gam = s == Space::BG ? CRVector<PrecComplex>{s, {}} : gamma_class(G, s, digits);
  const Rational rho = rho_coefficient(G, s);
  const PrecComplex norm = cpow(l2pi, -chat);

  FlatFrameVector out{s, {s, {}}, chat, log_z};
  for (const auto& [g, p0] : ch.comp) {
    NilPoly<PrecComplex> p = p0;
    const int cap = p.cap();
    if (gw) {
      for (int k = 0; k < cap; ++k) p[k] = p[k] * cpow(l2pi, Rational(k));
    } else if (s == Space::FJRW) {
      p *= cpow(l2pi, -G.model().sum_q());
    }
    if (const auto* gp = gam.at(g)) p *= *gp;
    if (sgn(rho) != 0) p *= exp_linear<PrecComplex>(cap, scale(log_z, rho));
    for (int k = 0; k < cap; ++k) {
      Rational gr = s == Space::BG ? Rational(0) : grading(G, s, g, k);
      p[k] = p[k] * cpow(log_z, -gr) * norm;
    }
    out.v.add(g, p);
  }
  return out;
}

PrecComplex s_pairing(const SymmetryGroup& G, const FlatFrameVector& u_twisted, const FlatFrameVector& v, int digits) {
  if (u_twisted.space != v.space) throw MathError("S pairing of frames on different spaces");
  PrecComplex base = log_two_pi_i(digits) + v.log_z;
  return cpow(base, v.chat) * pair(G, u_twisted.v, v.v);
}

PrecComplex pairing_phase(const SymmetryGroup& G, Space s, int digits) {
  Rational e = (s == Space::FJRW || s == Space::MF) ? G.model().n_vars() + G.model().sum_q() : central_charge(G, s);
  // e^{πi e}
  return cpow(PrecComplex::i_pi(digits), e);
}

CheckReport verify_gamma_pairing(const SymmetryGroup& G, const std::vector<std::pair<KClass, KClass>>& pairs,
                                 const PrecComplex& z, int digits, const Real& tol) {
  CheckReport rep{"gamma-pairing", true, 0, {}, "", {}};
  PrecComplex lz = log(z);
  PrecComplex lz_twisted = lz + PrecComplex::i_pi(digits);
  Real worst = Real::from_rational(0, digits_to_bits(digits));
  for (const auto& [E, F] : pairs) {
    FlatFrameVector u = flat_frame(G, E, lz_twisted, digits);
    FlatFrameVector v = flat_frame(G, F, lz, digits);
    PrecComplex S = s_pairing(G, u, v, digits);
    Integer x = chi(G, F, E);
    PrecComplex expected = pairing_phase(G, u.space, digits) * PrecComplex::from_rational(Rational(x), digits);
    Real dev = (S - expected).abs();
    worst = max(worst, dev);
    ++rep.cases;
    if (dev > tol)
      rep.fail(kclass_to_string(G, E) + " x " + kclass_to_string(G, F) + ": S = " + S.to_string(25) +
               ", expected " + expected.to_string(25));
  }
  rep.max_deviation = worst.to_string(6);
  return rep;
}

std::size_t lattice_rank(const SymmetryGroup& G, const std::vector<KClass>& gens) {
  if (gens.empty()) return 0;
  std::vector<CRVector<CycNum>> images;
  std::vector<std::pair<int, int>> coords;  // (sector, H-power)
  std::map<std::pair<int, int>, std::size_t> col;
  for (const auto& x : gens) {
    images.push_back(orb_ch(G, x));
    for (const auto& [g, p] : images.back().comp)
      for (int k = 0; k < p.cap(); ++k) col.emplace(std::make_pair(g, k), 0);
  }
  std::size_t c = 0;
  for (auto& [key, idx] : col) idx = c++;
  Matrix<CycNum> m(images.size(), col.size());
  for (std::size_t r = 0; r < images.size(); ++r)
    for (const auto& [g, p] : images[r].comp)
      for (int k = 0; k < p.cap(); ++k) m(r, col.at({g, k})) = p[k];
  return rank(m);
}

Rational kawasaki_chi_pg(const SymmetryGroup& G, const KClass& E, const KClass& F) {
  if (E.space != Space::PG || F.space != Space::PG) throw MathError("kawasaki_chi_pg expects classes on P(G)");
  const LGModel& M = G.model();
  const unsigned d = static_cast<unsigned>(M.degree);
  // E^∨ ⊗ F
  KClass hom{Space::PG, {}};
  for (const auto& [a, n] : E.terms)
    for (const auto& [b, m] : F.terms) hom.add(GammaCharacter{b.k1 - a.k1, G.char_sub(b.zeta, a.zeta), 0}, n * m);
  CRVector<CycNum> ch = orb_ch(G, hom);
  CRVector<CycNum> integrand{Space::PG, {}};
  CRVector<CycNum> unit{Space::PG, {}};
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    const int n = G.fixed_rank(g);
    if (n == 0) continue;
    unit.add(g, NilPoly<CycNum>::constant(n, CycNum(1)));
    const auto* c = ch.at(g);
    if (!c) continue;
    NilPoly<CycNum> v = *c;
    NilPoly<CycNum> normal = NilPoly<CycNum>::constant(n, CycNum(1));
    for (int j = 0; j < M.n_vars(); ++j) {
      const long cj = M.weights[static_cast<std::size_t>(j)];
      if (sgn(G.m(g, j)) == 0) {
        v *= todd_linear(n, Rational(cj)).map([](const Rational& r) { return CycNum(r); });
      } else {
        // 1 - e^{-2πi m_j} e^{-c_j H}
        NilPoly<CycNum> f = NilPoly<CycNum>::constant(n, CycNum(1)) -
                            exp_linear<CycNum>(n, CycNum(Rational(-cj))) *
                                CycNum::root_of_unity(d, -G.coord_exponent(g, j));
        normal *= f;
      }
    }
    integrand.add(g, v * normal.inverse());
  }
  CycNum r = pair(G, unit, integrand);
  return r.rational_value();
}

CheckReport verify_pg_chi(const SymmetryGroup& G, long a_min, long a_max, long span) {
  CheckReport rep{"pg-chi", true, 0, {}, "", {}};
  for (long a = a_min; a <= a_max; ++a)
    for (long b = a - span; b <= a + span; ++b)
      for (std::size_t z = 0; z < G.num_characters(); ++z) {
        KClass E = KClass::line(Space::PG, a);
        KClass F = KClass::line(Space::PG, b, static_cast<int>(z));
        Rational k = kawasaki_chi_pg(G, E, F);
        Integer m = chi(G, E, F);
        ++rep.cases;
        if (k != Rational(m))
          rep.fail("chi(O(" + std::to_string(a) + "), O(" + std::to_string(b) + ",z" + std::to_string(z) +
                   ")): pairing " + k.get_str() + ", monomials " + m.get_str());
      }
  return rep;
}

}  // namespace lgcy
