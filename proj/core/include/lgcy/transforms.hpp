#pragma once

#include <string>
#include <vector>

#include "lgcy/chern.hpp"
#include "lgcy/kclass.hpp"
#include "lgcy/matrix.hpp"
#include "lgcy/report.hpp"
#include "lgcy/statespace.hpp"

namespace lgcy {

// Matrix of a linear map between state spaces; columns follow `domain`,
// rows follow `codomain`.
template <class T>
struct StateMap {
  std::string name;
  Space dom;
  Space cod;
  std::vector<SectorBasisElt> domain;
  std::vector<SectorBasisElt> codomain;
  Matrix<T> m;
};

// Δ₋: 1_g ↦ φ_{g j⁻¹} on the narrow span.
CRVector<CycNum> delta_minus(const SymmetryGroup& G, const CRVector<CycNum>& v);
CRVector<CycNum> delta_minus_inverse(const SymmetryGroup& G, const CRVector<CycNum>& v);
// Δ̄₋ = (2πiz)^{Σq} Δ₋ at the branch log z.
CRVector<PrecComplex> delta_minus_bar(const SymmetryGroup& G, const CRVector<PrecComplex>& v,
                                      const PrecComplex& log_z, int digits);

// Δ₊: 1_g H^k ↦ -(1/d) j^*(1_g H^{k-1}) on the narrow span of YPlus.
template <class T>
CRVector<T> delta_plus(const SymmetryGroup& G, const CRVector<T>& v) {
  if (v.space != Space::YPlus) throw MathError("delta_plus expects a YPlus vector");
  const Rational f(-1, G.model().degree);
  CRVector<T> out{Space::ZAmbient, {}};
  for (const auto& [g, p] : v.comp) {
    if (!scalar_is_zero(p[0])) throw MathError("delta_plus: input has an H^0 component and is not narrow");
    const int cap = sector_cap(G, Space::ZAmbient, g);
    if (cap == 0) continue;
    NilPoly<T> q(cap);
    for (int k = 1; k < p.cap(); ++k) q[k - 1] = scalar_scale(p[k], f);
    out.add(g, q);
  }
  return out;
}
// Δ̄₊ = 2πiz Δ₊.
CRVector<PrecComplex> delta_plus_bar(const SymmetryGroup& G, const CRVector<PrecComplex>& v,
                                     const PrecComplex& log_z, int digits);

StateMap<CycNum> delta_minus_map(const SymmetryGroup& G);
StateMap<CycNum> delta_plus_map(const SymmetryGroup& G);

// Ū_l^T(1_g), exact, with the empty-sector convention applied.
EqCRVector<CycNum> u_bar_image_equivariant(const SymmetryGroup& G, long l, int g);
// Non-equivariant limit λ = 0.
CRVector<CycNum> u_bar_image(const SymmetryGroup& G, long l, int g);
EqCRVector<CycNum> apply_u_bar_equivariant(const SymmetryGroup& G, long l, const CRVector<CycNum>& v);
CRVector<CycNum> apply_u_bar(const SymmetryGroup& G, long l, const CRVector<CycNum>& v);
// Matrix of Ū_l (λ = 0) from all of YMinus, or narrow → narrow when `narrow` is set.
StateMap<CycNum> u_bar_l(const SymmetryGroup& G, long l, bool narrow);

CheckReport verify_induced(const SymmetryGroup& G, long l);
CheckReport verify_u_bar_narrow(const SymmetryGroup& G, long l);
CheckReport verify_delta_square(const SymmetryGroup& G);
CheckReport verify_qsd_square(const SymmetryGroup& G, long k_min, long k_max);
CheckReport verify_ksquare(const SymmetryGroup& G, long l);
// χ(i⁰x, i⁰y) on YMinus (character sums) against χ(vgit x, vgit y) on YPlus
// (monomial counting), over all window characters.
CheckReport verify_chi_preservation(const SymmetryGroup& G, long l);

// M_l = e^{-πidH/z} Δ₊ 𝕌_l^{nar} Δ₋⁻¹, with the Gamma-conjugated transport
// 𝕌_l = z^{-Gr} Γ̂₊ (2πi)^{deg₀/2} Ū_l (2πi)^{-deg₀/2} Γ̂₋⁻¹ z^{Gr}.
CRVector<PrecComplex> lgcy_apply(const SymmetryGroup& G, long l, const CRVector<PrecComplex>& alpha,
                                 const PrecComplex& log_z, int digits);
StateMap<PrecComplex> lgcy_matrix(const SymmetryGroup& G, long l, const PrecComplex& log_z, int digits);
// -S^Z(M α, M β) = S^{(w,G)}(α, β) on all narrow basis pairs.
CheckReport verify_lgcy_pairing(const SymmetryGroup& G, long l, const PrecComplex& z, int digits, const Real& tol);

}  // namespace lgcy
