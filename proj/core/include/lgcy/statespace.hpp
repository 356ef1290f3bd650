#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/exppoly.hpp"
#include "lgcy/model.hpp"
#include "lgcy/nilpoly.hpp"

namespace lgcy {

// State spaces, plus the K-theory-only tags BG (classifying stack of G) and
// MF (matrix factorizations of (w, G)).
enum class Space { YMinus, YPlus, PG, ZAmbient, FJRW, BG, MF };

std::string space_name(Space s);

// Number of H-powers carried by sector g (0 when the sector is absent).
int sector_cap(const SymmetryGroup& G, Space s, int g);

// Sector-indexed vector; C is NilPoly<T> or ExpPoly<T>. Sectors absent from
// `comp` are zero.
template <class C>
struct SectorMap {
  Space space = Space::YMinus;
  std::map<int, C> comp;

  void add(int g, const C& c) {
    auto it = comp.find(g);
    if (it == comp.end()) {
      if (!scalar_is_zero(c)) comp.emplace(g, c);
      return;
    }
    it->second += c;
    if (scalar_is_zero(it->second)) comp.erase(it);
  }
  const C* at(int g) const {
    auto it = comp.find(g);
    return it == comp.end() ? nullptr : &it->second;
  }
  bool is_zero() const {
    for (const auto& [g, c] : comp)
      if (!scalar_is_zero(c)) return false;
    return true;
  }

  SectorMap& operator+=(const SectorMap& o) {
    for (const auto& [g, c] : o.comp) add(g, c);
    return *this;
  }
  SectorMap& operator-=(const SectorMap& o) {
    for (const auto& [g, c] : o.comp) add(g, -c);
    return *this;
  }
  template <class S>
  SectorMap scaled(const S& s) const {
    SectorMap r{space, {}};
    for (const auto& [g, c] : comp) r.add(g, c * s);
    return r;
  }
  friend SectorMap operator+(SectorMap a, const SectorMap& b) { return a += b; }
  friend SectorMap operator-(SectorMap a, const SectorMap& b) { return a -= b; }
  friend bool operator==(const SectorMap& a, const SectorMap& b) {
    if (a.space != b.space) return false;
    SectorMap d = a;
    d -= b;
    return d.is_zero();
  }
  friend bool operator!=(const SectorMap& a, const SectorMap& b) { return !(a == b); }
};

template <class T>
using CRVector = SectorMap<NilPoly<T>>;
template <class T>
using EqCRVector = SectorMap<ExpPoly<T>>;

struct SectorBasisElt {
  Space space;
  int g;        // sector; for FJRW the label of φ_{g j^{-1}}
  int h_power;  // 0 on YMinus / FJRW
  Rational degree;  // real degree
};

// Full graded basis. YPlus and ZAmbient require convex_Od.
std::vector<SectorBasisElt> basis(const SymmetryGroup& G, Space s);
std::vector<SectorBasisElt> narrow_basis(const SymmetryGroup& G, Space s);
// Dimension of the broad part of the FJRW state space is reported through the
// fixed-rank scan only; no broad classes are constructed.
int fjrw_broad_sector_count(const SymmetryGroup& G);

// Integral of H^{n_g - 1} over ℙ(G)_g: 1 / (|Ḡ| Π_{m_j(g)=0} c_j).
Rational pg_sector_integral(const SymmetryGroup& G, int g);

// Grading operator eigenvalue Gr (half the shifted real degree) and deg₀/2.
Rational grading(const SymmetryGroup& G, Space s, int g, int h_power);
Rational half_deg0(const SymmetryGroup& G, Space s, int h_power);
// Central charge ĉ.
Rational central_charge(const SymmetryGroup& G, Space s);

void require_convex(const SymmetryGroup& G, Space s);

template <class T>
CRVector<T> ambient_restrict(const SymmetryGroup& G, const CRVector<T>& v) {
  if (v.space != Space::PG) throw MathError("ambient_restrict expects a vector on P(G)");
  CRVector<T> out{Space::ZAmbient, {}};
  for (const auto& [g, p] : v.comp) {
    int cap = sector_cap(G, Space::ZAmbient, g);
    if (cap > 0) out.add(g, p.truncated(cap));
  }
  return out;
}

namespace detail {
template <class T>
void check_caps(const SymmetryGroup& G, const CRVector<T>& v) {
  for (const auto& [g, p] : v.comp) {
    int cap = sector_cap(G, v.space, g);
    if (cap == 0) throw MathError(space_name(v.space) + " vector has data on an absent sector");
    if (p.cap() != cap) throw MathError(space_name(v.space) + " vector has a sector with the wrong H-cap");
  }
}
}  // namespace detail

// Orbifold Poincaré pairing (narrow pairing on YMinus, YPlus, FJRW).
template <class T>
T pair(const SymmetryGroup& G, const CRVector<T>& a, const CRVector<T>& b) {
  if (a.space != b.space) throw MathError("pairing vectors from different spaces");
  const Space s = a.space;
  detail::check_caps(G, a);
  detail::check_caps(G, b);
  T acc{};
  const Rational order(static_cast<long>(G.size()));
  const long d = G.model().degree;
  for (const auto& [g, p] : a.comp) {
    const auto* q = b.at(G.inv(g));
    switch (s) {
      case Space::YMinus:
      case Space::FJRW:
        if (!G.narrow(g)) throw MathError("non-narrow input to the narrow pairing on " + space_name(s));
        if (q) acc += scalar_scale(p[0] * (*q)[0], 1 / order);
        break;
      case Space::PG:
      case Space::YPlus:
      case Space::ZAmbient: {
        if (!q) break;
        const int n = G.fixed_rank(g);
        Rational w = pg_sector_integral(G, g);
        int shift = 0;  // a + b + shift = n_g - 1
        if (s == Space::YPlus) {
          if (!scalar_is_zero(p[0]) || !scalar_is_zero((*q)[0]))
            throw MathError("non-narrow input to the narrow pairing on YPlus");
          w *= Rational(-1, d);
          shift = -1;
        } else if (s == Space::ZAmbient) {
          w *= d;
          shift = 1;
        }
        for (int i = 0; i < p.cap(); ++i) {
          int k = n - 1 - shift - i;
          if (k < 0 || k >= q->cap()) continue;
          if (scalar_is_zero(p[i]) || scalar_is_zero((*q)[k])) continue;
          acc += scalar_scale(p[i] * (*q)[k], w);
        }
        break;
      }
      default:
        throw MathError("no pairing on " + space_name(s));
    }
  }
  if (s == Space::YMinus || s == Space::FJRW) {
    for (const auto& [g, q] : b.comp)
      if (!G.narrow(g)) throw MathError("non-narrow input to the narrow pairing on " + space_name(s));
  }
  return acc;
}

struct BundleDegrees {
  std::vector<Rational> degrees;
  bool nonempty;
  bool concave;
};

// deg |L_j| = q_j (2h - 2 + n) - Σ_i m_j(g_i).
BundleDegrees fjrw_bundle_degrees(const SymmetryGroup& G, int genus, const std::vector<int>& insertions);

}  // namespace lgcy
