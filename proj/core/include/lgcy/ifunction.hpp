#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgcy/model.hpp"
#include "lgcy/nilpoly.hpp"
#include "lgcy/precision.hpp"
#include "lgcy/report.hpp"
#include "lgcy/statespace.hpp"
#include "lgcy/zlaurent.hpp"

namespace lgcy {

// Σ_a p_a(H) λ^a with p_a in Q[H]/(H^cap).
class LamPoly {
 public:
  explicit LamPoly(int cap = 1) : cap_(cap) {}
  static LamPoly constant(int cap, const Rational& c);
  // aλ + bH
  static LamPoly linear(int cap, const Rational& a, const Rational& b);

  int cap() const { return cap_; }
  const std::map<int, NilPoly<Rational>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(int a, const NilPoly<Rational>& p);
  // Value at λ = 0, H = 0.
  Rational constant_term() const;
  int max_lambda_degree() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  LamPoly& operator+=(const LamPoly& o);
  LamPoly& operator-=(const LamPoly& o);
  LamPoly operator-() const;
  friend LamPoly operator+(LamPoly a, const LamPoly& b) { return a += b; }
  friend LamPoly operator-(LamPoly a, const LamPoly& b) { return a -= b; }
  friend LamPoly operator*(const LamPoly& a, const LamPoly& b);
  friend LamPoly operator*(LamPoly a, const Rational& s);
  friend bool operator==(const LamPoly& a, const LamPoly& b) { return a.cap_ == b.cap_ && a.t_ == b.t_; }

 private:
  int cap_;
  std::map<int, NilPoly<Rational>> t_;
};

inline bool scalar_is_zero(const LamPoly& p) { return p.is_zero(); }
std::string lampoly_to_string(const LamPoly& p);

// Coefficient ring of the truncated I-functions: Laurent in z over LamPoly.
using IZPoly = ZLaurent<LamPoly>;
std::string izpoly_to_string(const IZPoly& p);

struct SeriesIndex {
  long k0 = 0;
  std::map<int, long> kvec;  // g ∈ S ↦ k_g > 0
  long total() const;
  friend bool operator<(const SeriesIndex& a, const SeriesIndex& b) {
    return a.k0 != b.k0 ? a.k0 < b.k0 : a.kvec < b.kvec;
  }
  friend bool operator==(const SeriesIndex& a, const SeriesIndex& b) { return a.k0 == b.k0 && a.kvec == b.kvec; }
};
std::string series_index_to_string(const SymmetryGroup& G, const SeriesIndex& i);

enum class Side { Minus, Plus };

struct IFunctionTerm {
  int sector;    // j^{±k0} Π g^{k_g}
  IZPoly coeff;  // zero when the target sector is absent
};

struct IFunctionSeries {
  Side side;
  int order;
  std::string prefactor;  // t^{dλ/z} or q^{H/z}; never expanded
  std::map<SeriesIndex, IFunctionTerm> terms;
  // Plus side: indices with a nonzero coefficient where the literal exponent
  // Σ⟨k0 q_j - a^j⟩ differs from the homogeneous one Σ⟨-k0 q_j + a^j⟩.
  std::vector<SeriesIndex> exponent_flags;
};

// Elements fixing at least one coordinate (identity included).
std::vector<int> fixing_subset(const SymmetryGroup& G);
// All indices with k0 + Σ k_g ≤ order.
std::vector<SeriesIndex> series_indices(const SymmetryGroup& G, int order);
// a(k)^j = Σ_g k_g m_j(g).
std::vector<Rational> a_vector(const SymmetryGroup& G, const SeriesIndex& i);
int target_sector(const SymmetryGroup& G, Side side, const SeriesIndex& i);

// M(k0, k) = Π_j Π_{l=0}^{⌊k0 q_j + a^j⌋-1} (-c_j λ - (⟨k0 q_j + a^j⟩ + l) z).
IZPoly modification_factor(const SymmetryGroup& G, const SeriesIndex& i);

// Γ(1 - d(λ+H)/z)/Γ(1 - k0 - d(λ+H)/z) · Π_j Γ(1 + c_j H/z - ⟨-k0 q_j + a^j⟩)/Γ(1 + c_j H/z + k0 q_j - a^j)
// by the linear-factor rule, in Q[λ, H]/(H^cap)[z^{±1}].
IZPoly gamma_ratio(const SymmetryGroup& G, const SeriesIndex& i, int cap);
// The same ratio at H = λ = 0 from numeric Γ (reciprocal Γ vanishes at poles).
Real gamma_ratio_numeric(const SymmetryGroup& G, const SeriesIndex& i, int digits);

IFunctionSeries i_minus_series(const SymmetryGroup& G, int order, int jobs = 1);
IFunctionSeries i_plus_series(const SymmetryGroup& G, int order, int jobs = 1);

// Every λ^a z^b H^c term at sector h satisfies a + b + c + age(h) + deg(monomial) = 1,
// with deg t^g = 1 - age(g), deg t = 1 - Σq, deg q^{1/d} = Σq - 1.
CheckReport verify_degree_homogeneity(const SymmetryGroup& G, const IFunctionSeries& s);
// I^{Y₋} = z·1_id + t·1_j + (order ≥ 2).
CheckReport verify_i_minus_leading(const SymmetryGroup& G, const IFunctionSeries& s);
CheckReport verify_gamma_ratios(const SymmetryGroup& G, int order, int digits, const Real& tol);

// φ^{g j⁻¹} = |G| Π_{m_k(g)=0} (-λ_k) φ_{g⁻¹ j⁻¹}; FJRW sectors are keyed by g.
struct DualBasisEntry {
  int g;
  int partner;                 // g⁻¹
  Integer scale;               // |G| (-1)^{#fixed}
  std::vector<int> lambda_of;  // fixed coordinates k contributing λ_k
};
std::vector<DualBasisEntry> twisted_dual_basis(const SymmetryGroup& G);
PrecComplex dual_coefficient(const DualBasisEntry& e, const std::vector<PrecComplex>& lambdas, int digits);

// s_0 = ln(-1/λ), s_k = (k-1)!/λ^k.
struct Specialization {
  PrecComplex lambda;
  std::vector<PrecComplex> s;  // s_0 .. s_order
};
Specialization s_specialization(const PrecComplex& lambda, int order, int digits);
// exp(Σ_k s_k x^k/k!) and 1/e_T(L) = 1/(x - λ) in C[x]/(x^cap); returns the largest deviation.
Real verify_specialization(const Specialization& sp, int cap, int digits);

// Ω(f1, f2) = Res_{z=0} ⟨f1(-z), f2(z)⟩.
template <class T>
using ZSeries = std::map<int, CRVector<T>>;
template <class T>
T symplectic_pair(const SymmetryGroup& G, const ZSeries<T>& f1, const ZSeries<T>& f2) {
  T acc{};
  for (const auto& [a, u] : f1) {
    auto it = f2.find(-1 - a);
    if (it == f2.end()) continue;
    T p = pair(G, u, it->second);
    acc += (a % 2 == 0) ? p : T(-p);
  }
  return acc;
}

// Radius metadata c = (-d)^d Π c_i^{-c_i}.
Rational convergence_constant(const LGModel& M);

}  // namespace lgcy
