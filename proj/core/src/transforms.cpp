#include "lgcy/transforms.hpp"

#include <map>

namespace lgcy {

namespace {

PrecComplex cpow(const PrecComplex& log_base, const Rational& e) { return exp(scale(log_base, e)); }

PrecComplex log_two_pi_i(int digits) {
  mpfr_prec_t b = digits_to_bits(digits);
  return {log(Real::pi(b) * Real(2)), Real::pi(b) / Real(2)};
}

long mod(long a, long n) { return ((a % n) + n) % n; }

template <class T>
StateMap<T> build_map(const std::string& name, Space dom, Space cod, std::vector<SectorBasisElt> domain,
                      std::vector<SectorBasisElt> codomain, const std::vector<CRVector<T>>& images) {
  std::map<std::pair<int, int>, std::size_t> row;
  for (std::size_t i = 0; i < codomain.size(); ++i) row.emplace(std::make_pair(codomain[i].g, codomain[i].h_power), i);
  StateMap<T> out{name, dom, cod, std::move(domain), std::move(codomain), Matrix<T>(row.size(), images.size())};
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [g, p] : images[c].comp)
      for (int k = 0; k < p.cap(); ++k) {
        if (scalar_is_zero(p[k])) continue;
        auto it = row.find({g, k});
        if (it == row.end())
          throw MathError(name + ": image leaves the codomain at sector " + std::to_string(g) + ", H^" +
                          std::to_string(k));
        out.m(it->second, c) = p[k];
      }
  return out;
}

CRVector<CycNum> basis_vector(const SymmetryGroup& G, const SectorBasisElt& e) {
  CRVector<CycNum> v{e.space, {}};
  v.add(e.g, NilPoly<CycNum>::monomial(sector_cap(G, e.space, e.g), e.h_power, CycNum(1)));
  return v;
}

CRVector<PrecComplex> relabel(const CRVector<PrecComplex>& v, Space to) {
  CRVector<PrecComplex> out = v;
  out.space = to;
  return out;
}

}  // namespace

CRVector<CycNum> delta_minus(const SymmetryGroup& G, const CRVector<CycNum>& v) {
  if (v.space != Space::YMinus) throw MathError("delta_minus expects a YMinus vector");
  for (const auto& [g, p] : v.comp)
    if (!G.narrow(g)) throw MathError("delta_minus: broad sector in the input");
  CRVector<CycNum> out = v;
  out.space = Space::FJRW;
  return out;
}

CRVector<CycNum> delta_minus_inverse(const SymmetryGroup& G, const CRVector<CycNum>& v) {
  if (v.space != Space::FJRW) throw MathError("delta_minus_inverse expects an FJRW vector");
  (void)G;
  CRVector<CycNum> out = v;
  out.space = Space::YMinus;
  return out;
}

CRVector<PrecComplex> delta_minus_bar(const SymmetryGroup& G, const CRVector<PrecComplex>& v,
                                      const PrecComplex& log_z, int digits) {
  if (v.space != Space::YMinus) throw MathError("delta_minus_bar expects a YMinus vector");
  for (const auto& [g, p] : v.comp)
    if (!G.narrow(g)) throw MathError("delta_minus_bar: broad sector in the input");
  return relabel(v, Space::FJRW).scaled(cpow(log_two_pi_i(digits) + log_z, G.model().sum_q()));
}

CRVector<PrecComplex> delta_plus_bar(const SymmetryGroup& G, const CRVector<PrecComplex>& v,
                                     const PrecComplex& log_z, int digits) {
  return delta_plus(G, v).scaled(exp(log_two_pi_i(digits) + log_z));
}

StateMap<CycNum> delta_minus_map(const SymmetryGroup& G) {
  auto dom = narrow_basis(G, Space::YMinus);
  std::vector<CRVector<CycNum>> images;
  for (const auto& e : dom) images.push_back(delta_minus(G, basis_vector(G, e)));
  return build_map("delta_minus", Space::YMinus, Space::FJRW, dom, narrow_basis(G, Space::FJRW), images);
}

StateMap<CycNum> delta_plus_map(const SymmetryGroup& G) {
  auto dom = narrow_basis(G, Space::YPlus);
  std::vector<CRVector<CycNum>> images;
  for (const auto& e : dom) images.push_back(delta_plus(G, basis_vector(G, e)));
  return build_map("delta_plus", Space::YPlus, Space::ZAmbient, dom, basis(G, Space::ZAmbient), images);
}

EqCRVector<CycNum> u_bar_image_equivariant(const SymmetryGroup& G, long l, int g) {
  const long d = G.model().degree;
  const long m = G.r_of(g);
  const int gbar = G.gbar_of(g);
  const CycNum inv_d(Rational(1, d));
  EqCRVector<CycNum> out{Space::YPlus, {}};
  for (long b = 0; b < d; ++b) {
    const int h = G.mul(gbar, G.pow(G.j(), -b));
    const int cap = G.fixed_rank(h);
    if (cap == 0) continue;  // empty target sector
    ExpPoly<CycNum> coeff(cap);
    for (long k = 0; k < d; ++k) {
      const long e = l + k;
      coeff += exp_h_lambda<CycNum>(cap, e) * CycNum::root_of_unity(static_cast<unsigned>(d), mod((b + m) * e, d));
    }
    out.add(h, coeff * inv_d);
  }
  return out;
}

CRVector<CycNum> u_bar_image(const SymmetryGroup& G, long l, int g) {
  CRVector<CycNum> out{Space::YPlus, {}};
  for (const auto& [h, e] : u_bar_image_equivariant(G, l, g).comp) out.add(h, e.non_equivariant());
  return out;
}

EqCRVector<CycNum> apply_u_bar_equivariant(const SymmetryGroup& G, long l, const CRVector<CycNum>& v) {
  if (v.space != Space::YMinus) throw MathError("u_bar expects a YMinus vector");
  EqCRVector<CycNum> out{Space::YPlus, {}};
  for (const auto& [g, p] : v.comp) out += u_bar_image_equivariant(G, l, g).scaled(p[0]);
  return out;
}

CRVector<CycNum> apply_u_bar(const SymmetryGroup& G, long l, const CRVector<CycNum>& v) {
  if (v.space != Space::YMinus) throw MathError("u_bar expects a YMinus vector");
  CRVector<CycNum> out{Space::YPlus, {}};
  for (const auto& [g, p] : v.comp) out += u_bar_image(G, l, g).scaled(p[0]);
  return out;
}

StateMap<CycNum> u_bar_l(const SymmetryGroup& G, long l, bool narrow) {
  auto dom = narrow ? narrow_basis(G, Space::YMinus) : basis(G, Space::YMinus);
  auto cod = narrow ? narrow_basis(G, Space::YPlus) : basis(G, Space::YPlus);
  std::vector<CRVector<CycNum>> images;
  for (const auto& e : dom) images.push_back(u_bar_image(G, l, e.g));
  return build_map("u_bar_" + std::to_string(l), Space::YMinus, Space::YPlus, dom, cod, images);
}

CheckReport verify_induced(const SymmetryGroup& G, long l) {
  CheckReport rep{"induced", true, 0, {}, "", {}};
  const long d = G.model().degree;
  for (long k = l; k < l + d; ++k)
    for (std::size_t z = 0; z < G.num_characters(); ++z) {
      const int zeta = static_cast<int>(z);
      // I^* ch(O(k, ζ)) on BG.
      CRVector<CycNum> bg{Space::YMinus, {}};
      for (std::size_t i = 0; i < G.size(); ++i) {
        const int g = static_cast<int>(i);
        bg.add(g, NilPoly<CycNum>::constant(1, G.character_value(k, zeta, G.inv(g))));
      }
      EqCRVector<CycNum> lhs = apply_u_bar_equivariant(G, l, bg);
      // I^* ch of the equivariant line bundle O(k, ζ) on YPlus.
      EqCRVector<CycNum> rhs{Space::YPlus, {}};
      for (std::size_t i = 0; i < G.size(); ++i) {
        const int h = static_cast<int>(i);
        const int cap = G.fixed_rank(h);
        if (cap == 0) continue;
        rhs.add(h, exp_h_lambda<CycNum>(cap, k) * G.character_value(k, zeta, G.inv(h)));
      }
      ++rep.cases;
      if (lhs != rhs) rep.fail("l=" + std::to_string(l) + " O(" + std::to_string(k) + ",z" + std::to_string(zeta) + ")");
    }
  return rep;
}

CheckReport verify_u_bar_narrow(const SymmetryGroup& G, long l) {
  CheckReport rep{"u-bar-narrow", true, 0, {}, "", {}};
  const std::string tag = "l=" + std::to_string(l) + ": ";
  for (int g : G.narrow_elements()) {
    ++rep.cases;
    for (const auto& [h, p] : u_bar_image(G, l, g).comp)
      if (!scalar_is_zero(p[0])) rep.fail(tag + "narrow sector " + std::to_string(g) + " hits H^0 of sector " + std::to_string(h));
  }
  for (bool narrow : {false, true}) {
    ++rep.cases;
    StateMap<CycNum> u = u_bar_l(G, l, narrow);
    const char* which = narrow ? "narrow" : "full";
    if (u.m.rows() != u.m.cols()) {
      rep.fail(tag + which + " matrix is " + std::to_string(u.m.rows()) + "x" + std::to_string(u.m.cols()));
      continue;
    }
    if (determinant(u.m).is_zero()) rep.fail(tag + which + " matrix is singular");
  }
  return rep;
}

CheckReport verify_delta_square(const SymmetryGroup& G) {
  CheckReport rep{"delta-square", true, 0, {}, "", {}};
  const long d = G.model().degree;
  for (long k = 0; k < d; ++k)
    for (std::size_t z = 0; z < G.num_characters(); ++z) {
      GammaCharacter t{k, static_cast<int>(z), 0};
      const std::string w = "twist O(" + std::to_string(k) + ",z" + std::to_string(z) + ")";
      ++rep.cases;
      // Alternating sum of exterior powers, restricted from BG.
      CRVector<CycNum> koszul = orb_ch(G, koszul_kclass(G, Space::BG, t));
      bool broad_ok = true;
      for (const auto& [g, p] : koszul.comp)
        if (!G.narrow(g)) broad_ok = false;
      if (!broad_ok) {
        rep.fail(w + ": Koszul character is nonzero on a broad sector");
        continue;
      }
      koszul.space = Space::YMinus;
      if (delta_minus(G, koszul) != ch_mf_koszul(G, t)) rep.fail(w + ": ch mismatch");
      ++rep.cases;
      if (orb_ch(G, to_mf(KClass::line(Space::YMinus, k, t.zeta))) != ch_mf_koszul(G, t))
        rep.fail(w + ": ch of the stabilized line bundle mismatch");
    }
  return rep;
}

CheckReport verify_qsd_square(const SymmetryGroup& G, long k_min, long k_max) {
  CheckReport rep{"qsd-square", true, 0, {}, "", {}};
  ToddEuler te = todd_and_euler(G);
  auto check = [&](const KClass& F, const std::string& w) {
    ++rep.cases;
    CRVector<CycNum> lhs = delta_plus(G, sector_product(te.todd, orb_ch(G, F)));
    CRVector<CycNum> rhs = orb_ch(G, restrict_to_z(F));
    if (lhs != rhs) rep.fail(w);
  };
  KClass combo{Space::YPlus, {}};
  long sign = 1;
  for (long k = k_min; k <= k_max; ++k)
    for (std::size_t z = 0; z < G.num_characters(); ++z) {
      KClass F = KClass::line(Space::YPlus, k, static_cast<int>(z));
      check(F, "i0_* O(" + std::to_string(k) + ",z" + std::to_string(z) + ")");
      combo += F.scaled(Integer(sign * (k - k_min + 1)));
      sign = -sign;
    }
  check(combo, "mixed combination");
  return rep;
}

CheckReport verify_ksquare(const SymmetryGroup& G, long l) {
  CheckReport rep{"ksquare", true, 0, {}, "", {}};
  const WindowSpec w{l};
  const long d = G.model().degree;
  for (long k = 0; k < d; ++k)
    for (std::size_t z = 0; z < G.num_characters(); ++z) {
      // i⁰_* O_BG(k, ζ) as a supported class on YMinus.
      KClass x = KClass::line(Space::YMinus, k, static_cast<int>(z));
      KClass top = restrict_to_z(vgit_l(G, x, w));
      KClass bottom = orlov_l(G, to_mf(x), w);
      ++rep.cases;
      if (!same_class(G, top, bottom))
        rep.fail("l=" + std::to_string(l) + " O(" + std::to_string(k) + ",z" + std::to_string(z) + "): " +
                 kclass_to_string(G, top) + " vs " + kclass_to_string(G, bottom));
    }
  return rep;
}

CheckReport verify_chi_preservation(const SymmetryGroup& G, long l) {
  CheckReport rep{"chi-preservation", true, 0, {}, "", {}};
  const WindowSpec w{l};
  const long d = G.model().degree;
  std::vector<KClass> minus, plus;
  std::vector<std::string> names;
  for (long k = l; k < l + d; ++k)
    for (std::size_t z = 0; z < G.num_characters(); ++z) {
      minus.push_back(KClass::line(Space::YMinus, k, static_cast<int>(z)));
      plus.push_back(vgit_l(G, minus.back(), w));
      names.push_back("O(" + std::to_string(k) + ",z" + std::to_string(z) + ")");
    }
  for (std::size_t i = 0; i < minus.size(); ++i)
    for (std::size_t j = 0; j < minus.size(); ++j) {
      Integer a = chi(G, minus[i], minus[j]);
      Integer b = chi(G, plus[i], plus[j]);
      ++rep.cases;
      if (a != b)
        rep.fail("l=" + std::to_string(l) + " " + names[i] + " x " + names[j] + ": " + a.get_str() + " vs " + b.get_str());
    }
  return rep;
}

CRVector<PrecComplex> lgcy_apply(const SymmetryGroup& G, long l, const CRVector<PrecComplex>& alpha,
                                 const PrecComplex& log_z, int digits) {
  if (alpha.space != Space::FJRW) throw MathError("lgcy_apply expects an FJRW vector");
  const long d = G.model().degree;
  const PrecComplex l2pi = log_two_pi_i(digits);
  const CRVector<PrecComplex> gamma_minus = gamma_class(G, Space::YMinus, digits);
  const CRVector<PrecComplex> gamma_plus = gamma_class(G, Space::YPlus, digits);

  // Δ₋⁻¹, then z^{Gr} Γ̂₋⁻¹ on YMinus; deg₀ vanishes there.
  CRVector<PrecComplex> plus{Space::YPlus, {}};
  for (const auto& [g, p] : alpha.comp) {
    if (!G.narrow(g)) throw MathError("lgcy_apply: broad sector in the input");
    PrecComplex c = p[0] * cpow(log_z, grading(G, Space::YMinus, g, 0)) / (*gamma_minus.at(g))[0];
    CRVector<PrecComplex> img = to_numeric(u_bar_image(G, l, g), digits);
    plus += img.scaled(c);
  }

  // z^{-Gr} Γ̂₊ (2πi)^{deg₀/2} on YPlus.
  CRVector<PrecComplex> out{Space::YPlus, {}};
  for (auto [g, p] : plus.comp) {
    for (int k = 0; k < p.cap(); ++k) p[k] = p[k] * cpow(l2pi, Rational(k));
    p *= *gamma_plus.at(g);
    for (int k = 0; k < p.cap(); ++k) p[k] = p[k] * cpow(log_z, -grading(G, Space::YPlus, g, k));
    out.add(g, p);
  }

  CRVector<PrecComplex> z = delta_plus(G, out);
  // e^{-πi d H / z}
  const PrecComplex a = PrecComplex::i_pi(digits) * PrecComplex::from_rational(Rational(-d), digits) / exp(log_z);
  CRVector<PrecComplex> res{Space::ZAmbient, {}};
  for (const auto& [g, p] : z.comp) res.add(g, p * exp_linear<PrecComplex>(p.cap(), a));
  return res;
}

StateMap<PrecComplex> lgcy_matrix(const SymmetryGroup& G, long l, const PrecComplex& log_z, int digits) {
  auto dom = narrow_basis(G, Space::FJRW);
  std::vector<CRVector<PrecComplex>> images;
  for (const auto& e : dom) images.push_back(lgcy_apply(G, l, to_numeric(basis_vector(G, e), digits), log_z, digits));
  auto cod = basis(G, Space::ZAmbient);
  StateMap<PrecComplex> out{"lgcy_" + std::to_string(l), Space::FJRW, Space::ZAmbient, dom, cod,
                            Matrix<PrecComplex>(cod.size(), dom.size())};
  std::map<std::pair<int, int>, std::size_t> row;
  for (std::size_t i = 0; i < cod.size(); ++i) row.emplace(std::make_pair(cod[i].g, cod[i].h_power), i);
  for (std::size_t r = 0; r < cod.size(); ++r)
    for (std::size_t c = 0; c < dom.size(); ++c) out.m(r, c) = PrecComplex::zero(digits);
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [g, p] : images[c].comp)
      for (int k = 0; k < p.cap(); ++k) out.m(row.at({g, k}), c) = p[k];
  return out;
}

CheckReport verify_lgcy_pairing(const SymmetryGroup& G, long l, const PrecComplex& z, int digits, const Real& tol) {
  CheckReport rep{"lgcy-pairing", true, 0, {}, "", {}};
  const PrecComplex lz = log(z);
  const PrecComplex lz_twisted = lz + PrecComplex::i_pi(digits);
  const PrecComplex base = log_two_pi_i(digits) + lz;
  const Rational chat_z = central_charge(G, Space::ZAmbient);
  const Rational chat_w = central_charge(G, Space::FJRW);
  auto dom = narrow_basis(G, Space::FJRW);
  std::vector<CRVector<PrecComplex>> a, u, v;
  for (const auto& e : dom) {
    a.push_back(to_numeric(basis_vector(G, e), digits));
    u.push_back(lgcy_apply(G, l, a.back(), lz_twisted, digits));
    v.push_back(lgcy_apply(G, l, a.back(), lz, digits));
  }
  Real worst = Real::from_rational(0, digits_to_bits(digits));
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      PrecComplex lhs = -(cpow(base, chat_z) * pair(G, u[i], v[j]));
      PrecComplex rhs = cpow(base, chat_w) * pair(G, a[i], a[j]);
      Real dev = (lhs - rhs).abs();
      worst = max(worst, dev);
      ++rep.cases;
      if (dev > tol)
        rep.fail("l=" + std::to_string(l) + " (" + std::to_string(dom[i].g) + "," + std::to_string(dom[j].g) +
                 "): " + lhs.to_string(20) + " vs " + rhs.to_string(20));
    }
  rep.max_deviation = worst.to_string(6);
  return rep;
}

}  // namespace lgcy
