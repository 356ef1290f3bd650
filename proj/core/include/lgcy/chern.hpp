#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgcy/kclass.hpp"
#include "lgcy/precision.hpp"
#include "lgcy/report.hpp"
#include "lgcy/statespace.hpp"

namespace lgcy {

// Orbifold Chern character. The image lives on the state space matching the
// class: BG/YMinus → YMinus, PG → PG, YPlus → YPlus, ZAmbient → ZAmbient,
// MF → FJRW.
CRVector<CycNum> orb_ch(const SymmetryGroup& G, const KClass& x);

// Equality in K-theory, decided through the Chern character.
bool same_class(const SymmetryGroup& G, const KClass& x, const KClass& y);

// ch of the Koszul complex {0, β} twisted by a character, on YMinus.
CRVector<CycNum> ch_koszul_minus(const SymmetryGroup& G, const GammaCharacter& twist);
// ch of the Koszul factorization {α, β} twisted by a character, on FJRW.
CRVector<CycNum> ch_mf_koszul(const SymmetryGroup& G, const GammaCharacter& twist);

struct ToddEuler {
  CRVector<CycNum> todd;   // (-dH) / (1 - e^{dH}) on every YPlus sector
  CRVector<CycNum> euler;  // -dH
};
ToddEuler todd_and_euler(const SymmetryGroup& G);

// I^*: sector g ↦ g⁻¹.
template <class C>
SectorMap<C> involution(const SymmetryGroup& G, const SectorMap<C>& v) {
  SectorMap<C> out{v.space, {}};
  for (const auto& [g, c] : v.comp) out.add(G.inv(g), c);
  return out;
}

CRVector<PrecComplex> to_numeric(const CRVector<CycNum>& v, int digits);

// Sector-wise product of two vectors on the same space.
template <class T>
CRVector<T> sector_product(const CRVector<T>& a, const CRVector<T>& b) {
  CRVector<T> out{a.space, {}};
  for (const auto& [g, p] : a.comp) {
    const auto* q = b.at(g);
    if (q) out.add(g, p * (*q));
  }
  return out;
}

// Γ̂ on a state space: Π_j Γ(1 - m_j(g) + c_j H) on PG sectors, times Γ(1 - dH)
// on YPlus, divided by Γ(1 + dH) on ZAmbient; Π_j Γ(1 - m_j(g)) on YMinus/FJRW.
CRVector<PrecComplex> gamma_class(const SymmetryGroup& G, Space s, int digits);

struct FlatFrameVector {
  Space space;
  CRVector<PrecComplex> v;
  Rational chat;
  PrecComplex log_z;
};

// s(E) = (2πi)^{-ĉ} z^{-Gr} z^ρ Γ̂ (2πi)^{deg₀/2} I^* ch(E), at the large-radius
// limit where the solution operator is the identity. `log_z` fixes the branch.
FlatFrameVector flat_frame(const SymmetryGroup& G, const KClass& x, const PrecComplex& log_z, int digits);

// S(u, v) = (2πiz)^ĉ ⟨u(e^{πi}z), v(z)⟩, where u was built at log z + πi.
PrecComplex s_pairing(const SymmetryGroup& G, const FlatFrameVector& u_twisted, const FlatFrameVector& v, int digits);

// Expected value of S(s(E), s(F)) / χ(F, E): e^{πi dim} or e^{πi(N + Σq)}.
PrecComplex pairing_phase(const SymmetryGroup& G, Space s, int digits);

CheckReport verify_gamma_pairing(const SymmetryGroup& G, const std::vector<std::pair<KClass, KClass>>& pairs,
                                 const PrecComplex& z, int digits, const Real& tol);

// Rank of the span of Chern characters over Q(ξ_d).
std::size_t lattice_rank(const SymmetryGroup& G, const std::vector<KClass>& gens);

// χ(E, F) on ℙ(G) from the state-space pairing and Kawasaki's formula.
Rational kawasaki_chi_pg(const SymmetryGroup& G, const KClass& E, const KClass& F);
// Kawasaki χ(O(a), O(b, ζ)) against monomial counting for |a - b| ≤ span.
CheckReport verify_pg_chi(const SymmetryGroup& G, long a_min, long a_max, long span);

}  // namespace lgcy
