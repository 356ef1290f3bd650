#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "lgcy/model.hpp"
#include "lgcy/rational.hpp"
#include "lgcy/statespace.hpp"

namespace lgcy {

// Character (k1, ζ, k2) of Γ̃ = C* × Ḡ × C*_R; ζ indexes SymmetryGroup::characters().
struct GammaCharacter {
  long k1 = 0;
  int zeta = 0;
  long k2 = 0;

  friend bool operator<(const GammaCharacter& a, const GammaCharacter& b) {
    return std::tie(a.k1, a.zeta, a.k2) < std::tie(b.k1, b.zeta, b.k2);
  }
  friend bool operator==(const GammaCharacter& a, const GammaCharacter& b) {
    return a.k1 == b.k1 && a.zeta == b.zeta && a.k2 == b.k2;
  }
};

// Formal integer combination of line-bundle characters. What a term means
// depends on the space:
//   BG        O_BG(k1, ζ)
//   YMinus    i⁰_* O_BG(k1, ζ)
//   PG        O(k1, ζ)
//   YPlus     i⁰_* O_PG(k1, ζ)
//   ZAmbient  j^* O_PG(k1, ζ)
//   MF        i¹_* O(k1, ζ, k2), the Koszul factorization twisted by the character
// k2 is carried only on MF and is ignored elsewhere.
struct KClass {
  Space space = Space::BG;
  std::map<GammaCharacter, Integer> terms;

  static KClass line(Space s, long k, int zeta = 0, long k2 = 0) {
    KClass x{s, {}};
    x.add({k, zeta, k2}, 1);
    return x;
  }

  void add(const GammaCharacter& c, const Integer& n) {
    if (n == 0) return;
    auto it = terms.find(c);
    if (it == terms.end()) {
      terms.emplace(c, n);
      return;
    }
    it->second += n;
    if (it->second == 0) terms.erase(it);
  }
  KClass& operator+=(const KClass& o) {
    same_space(o);
    for (const auto& [c, n] : o.terms) add(c, n);
    return *this;
  }
  KClass& operator-=(const KClass& o) {
    same_space(o);
    for (const auto& [c, n] : o.terms) add(c, -n);
    return *this;
  }
  KClass scaled(const Integer& n) const {
    KClass r{space, {}};
    for (const auto& [c, m] : terms) r.add(c, m * n);
    return r;
  }
  KClass retagged(Space s) const {
    KClass r = *this;
    r.space = s;
    return r;
  }
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  // Formal (term-wise) equality; use same_class() for equality in K-theory.
  friend bool operator==(const KClass& a, const KClass& b) { return a.space == b.space && a.terms == b.terms; }

 private:
  void same_space(const KClass& o) const {
    if (o.space != space) throw MathError("adding K-classes on different spaces");
  }
};

std::string kclass_to_string(const SymmetryGroup& G, const KClass& x);

struct WindowSpec {
  long l = 0;
};

// (k1 - m d, ζ, k2 + m) with k1 - m d in [l, l + d - 1].
std::pair<GammaCharacter, long> floor_char(const SymmetryGroup& G, const GammaCharacter& c, const WindowSpec& w);

// Σ_J (-1)^{|J|} (k1 - c_J, ζ - e_J, k2).
KClass koszul_kclass(const SymmetryGroup& G, Space s, const GammaCharacter& twist);

// K(k, ζ) on ℙ(G), k in [l + d, l + 2d - 1].
KClass k_cokernel_class(const SymmetryGroup& G, long k, int zeta, const WindowSpec& w);

// vGIT_l on classes supported on BG: YMinus → YPlus.
KClass vgit_l(const SymmetryGroup& G, const KClass& x, const WindowSpec& w);

// Orlov_l on the span of i¹_* O_BG(k, ζ): MF → ZAmbient, via Γ̃-floors of the
// Koszul factorization.
KClass orlov_l(const SymmetryGroup& G, const KClass& x, const WindowSpec& w);

// j^* ∘ π_* on classes supported on ℙ(G): YPlus → ZAmbient.
KClass restrict_to_z(const KClass& x);
// i¹_* ∘ π_*: YMinus → MF (k2 = 0).
KClass to_mf(const KClass& x);

// Monomial-count cap for sheaf cohomology on ℙ(G), in units of d.
constexpr long kDefaultDegreeCapFactor = 10;

// h⁰(ℙ(G), O(k, θ)).
Integer h0_pg(const SymmetryGroup& G, long k, int theta, long cap_factor = kDefaultDegreeCapFactor);
// χ(ℙ(G), O(k, θ)) via h⁰ and Serre duality.
Integer chi_pg_line(const SymmetryGroup& G, long k, int theta, long cap_factor = kDefaultDegreeCapFactor);

// Euler pairing χ(x, y) = Σ (-1)^i dim Ext^i(x, y).
Integer chi(const SymmetryGroup& G, const KClass& x, const KClass& y, long cap_factor = kDefaultDegreeCapFactor);

}  // namespace lgcy
