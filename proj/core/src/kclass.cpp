#include "lgcy/kclass.hpp"

#include <algorithm>
#include <sstream>

#include "lgcy/cyclotomic.hpp"

namespace lgcy {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Subset {
  long weight;  // c_J
  int chi;      // e_J as a character index
  int size;
};

std::vector<Subset> subsets(const SymmetryGroup& G) {
  const int n = G.model().n_vars();
  if (n > 20) throw MathError("too many variables for subset enumeration");
  std::vector<Subset> out;
  out.reserve(std::size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Subset s{0, G.trivial_character(), 0};
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      s.weight += G.model().weights[static_cast<std::size_t>(j)];
      s.chi = G.char_add(s.chi, G.coordinate_character(j));
      ++s.size;
    }
    out.push_back(s);
  }
  return out;
}

void require(const KClass& x, Space s, const char* what) {
  if (x.space != s) throw MathError(std::string(what) + " expects a class on " + space_name(s));
}

}  // namespace

std::string kclass_to_string(const SymmetryGroup& G, const KClass& x) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, n] : x.terms) {
    if (!first) os << (n < 0 ? " - " : " + ");
    else if (n < 0) os << "-";
    Integer mag = abs(n);
    if (mag != 1) os << mag.get_str() << "*";
    os << "O(" << c.k1;
    if (c.zeta != G.trivial_character()) os << ",z" << c.zeta;
    if (x.space == Space::MF) os << ";" << c.k2;
    os << ")";
    first = false;
  }
  if (first) os << "0";
  return space_name(x.space) + "[" + os.str() + "]";
}

std::pair<GammaCharacter, long> floor_char(const SymmetryGroup& G, const GammaCharacter& c, const WindowSpec& w) {
  const long d = G.model().degree;
  long m = floor_div(c.k1 - w.l, d);
  return {GammaCharacter{c.k1 - m * d, c.zeta, c.k2 + m}, m};
}

KClass koszul_kclass(const SymmetryGroup& G, Space s, const GammaCharacter& twist) {
  KClass out{s, {}};
  for (const auto& J : subsets(G)) {
    GammaCharacter c{twist.k1 - J.weight, G.char_sub(twist.zeta, J.chi), twist.k2};
    out.add(c, J.size % 2 == 0 ? 1 : -1);
  }
  return out;
}

KClass k_cokernel_class(const SymmetryGroup& G, long k, int zeta, const WindowSpec& w) {
  const long d = G.model().degree;
  if (k < w.l + d || k > w.l + 2 * d - 1)
    throw MathError("K(k, zeta) needs k in [l+d, l+2d-1]; got k = " + std::to_string(k));
  KClass out{Space::PG, {}};
  for (const auto& J : subsets(G)) {
    if (k - J.weight < w.l + d) continue;
    out.add(GammaCharacter{k - J.weight - d, G.char_sub(zeta, J.chi), 0}, J.size % 2 == 0 ? 1 : -1);
  }
  return out;
}

KClass vgit_l(const SymmetryGroup& G, const KClass& x, const WindowSpec& w) {
  require(x, Space::YMinus, "vgit_l");
  const long d = G.model().degree;
  KClass out{Space::YPlus, {}};
  for (const auto& [c, n] : x.terms) {
    // BG characters only see k mod d.
    long k = w.l + d + (((c.k1 - w.l) % d) + d) % d;
    KClass kc = k_cokernel_class(G, k, c.zeta, w).scaled(n).retagged(Space::YPlus);
    out += kc;
  }
  return out;
}

KClass orlov_l(const SymmetryGroup& G, const KClass& x, const WindowSpec& w) {
  require(x, Space::MF, "orlov_l");
  const long d = G.model().degree;
  KClass out{Space::ZAmbient, {}};
  for (const auto& [c, n] : x.terms) {
    // O(d) acts on the factorization category like the R-charge shift, so the
    // twist may be moved into [l+d, l+2d-1] by trading Λ-weight for k2.
    long shift = floor_div(c.k1 - (w.l + d), d);
    GammaCharacter t{c.k1 - shift * d, c.zeta, c.k2 + shift};
    KClass kos = koszul_kclass(G, Space::MF, t);
    for (const auto& [term, sign] : kos.terms) {
      auto [floored, m] = floor_char(G, term, w);
      if (m == 0) continue;  // unchanged summands drop out of the cokernel
      // Forgetting k2: twisting by O(η) is the shift [2], trivial in K-theory.
      out.add(GammaCharacter{floored.k1, floored.zeta, 0}, sign * n);
    }
  }
  return out;
}

KClass restrict_to_z(const KClass& x) {
  require(x, Space::YPlus, "restrict_to_z");
  return x.retagged(Space::ZAmbient);
}

KClass to_mf(const KClass& x) {
  require(x, Space::YMinus, "to_mf");
  KClass out{Space::MF, {}};
  for (const auto& [c, n] : x.terms) out.add(GammaCharacter{c.k1, c.zeta, 0}, n);
  return out;
}

namespace {

// count[k][θ] = #{monomials of weighted degree k with Ḡ-character θ}, 0 ≤ k ≤ K.
std::vector<std::vector<Integer>> monomial_table(const SymmetryGroup& G, long K) {
  const std::size_t nc = G.num_characters();
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(K) + 1, std::vector<Integer>(nc, Integer(0)));
  t[0][static_cast<std::size_t>(G.trivial_character())] = 1;
  for (int j = 0; j < G.model().n_vars(); ++j) {
    const long c = G.model().weights[static_cast<std::size_t>(j)];
    const int e = G.coordinate_character(j);
    // Multiplying by 1/(1 - x_j): t[k][θ] += t[k - c][θ - e], ascending k.
    for (long k = c; k <= K; ++k)
      for (std::size_t th = 0; th < nc; ++th) {
        const Integer& prev = t[static_cast<std::size_t>(k - c)][static_cast<std::size_t>(G.char_sub(static_cast<int>(th), e))];
        if (prev != 0) t[static_cast<std::size_t>(k)][th] += prev;
      }
  }
  return t;
}

}  // namespace

Integer h0_pg(const SymmetryGroup& G, long k, int theta, long cap_factor) {
  if (k < 0) return Integer(0);
  if (k > cap_factor * G.model().degree)
    throw MathError("weighted degree " + std::to_string(k) + " beyond the enumeration cap");
  return monomial_table(G, k)[static_cast<std::size_t>(k)][static_cast<std::size_t>(theta)];
}

Integer chi_pg_line(const SymmetryGroup& G, long k, int theta, long cap_factor) {
  const int n = G.model().n_vars();
  Integer top = h0_pg(G, -k - G.model().sum_weights(), G.char_sub(G.char_neg(theta), G.det_character()), cap_factor);
  Integer h0 = h0_pg(G, k, theta, cap_factor);
  return (n % 2 == 1) ? Integer(h0 + top) : Integer(h0 - top);
}

namespace {

Integer chi_pg_classes(const SymmetryGroup& G, const KClass& x, const KClass& y, long twist, long cap_factor) {
  const long sc = G.model().sum_weights();
  const int n = G.model().n_vars();
  long kmax = 0;
  for (const auto& [a, na] : x.terms)
    for (const auto& [b, nb] : y.terms) {
      long k = b.k1 + twist - a.k1;
      kmax = std::max({kmax, k, -k - sc});
    }
  if (kmax > cap_factor * G.model().degree)
    throw MathError("weighted degree " + std::to_string(kmax) + " beyond the enumeration cap");
  auto table = monomial_table(G, kmax);
  auto h0 = [&](long k, int theta) {
    return k < 0 ? Integer(0) : table[static_cast<std::size_t>(k)][static_cast<std::size_t>(theta)];
  };
  Integer acc(0);
  for (const auto& [a, na] : x.terms)
    for (const auto& [b, nb] : y.terms) {
      long k = b.k1 + twist - a.k1;
      int theta = G.char_sub(b.zeta, a.zeta);
      Integer top = h0(-k - sc, G.char_sub(G.char_neg(theta), G.det_character()));
      Integer v = (n % 2 == 1) ? Integer(h0(k, theta) + top) : Integer(h0(k, theta) - top);
      acc += na * nb * v;
    }
  return acc;
}

Integer rational_to_integer(const CycNum& v, const char* what) {
  if (!v.is_rational()) throw MathError(std::string(what) + ": Euler pairing is not rational");
  const Rational& r = v.rational_value();
  if (!is_integer(r)) throw MathError(std::string(what) + ": Euler pairing is not an integer");
  return r.get_num();
}

// (1/|G|) Σ_g conj χ_x(g) χ_y(g) w(g), accumulated in the integer group ring
// Z[x]/(x^d - 1) and reduced once at the end.
Integer character_sum(const SymmetryGroup& G, const KClass& x, const KClass& y, bool koszul_weight) {
  const long d = G.model().degree;
  const auto slot = [d](long e) { return static_cast<std::size_t>(((e % d) + d) % d); };
  std::vector<Integer> acc(static_cast<std::size_t>(d), Integer(0));
  std::vector<Integer> ring(static_cast<std::size_t>(d)), tmp(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    if (koszul_weight && !G.narrow(g)) continue;  // some factor (1 - 1) vanishes
    std::fill(ring.begin(), ring.end(), Integer(0));
    bool nonzero = false;
    for (const auto& [a, n] : x.terms)
      for (const auto& [b, m] : y.terms) {
        ring[slot(G.character_exponent(b.k1, b.zeta, g) - G.character_exponent(a.k1, a.zeta, g))] += n * m;
        nonzero = true;
      }
    if (!nonzero) continue;
    if (koszul_weight)
      for (int j = 0; j < G.model().n_vars(); ++j) {
        // multiply by 1 - x^e
        const long e = G.coord_exponent(g, j);
        for (long k = 0; k < d; ++k) tmp[static_cast<std::size_t>(k)] = ring[static_cast<std::size_t>(k)] - ring[slot(k - e)];
        std::swap(ring, tmp);
      }
    for (long k = 0; k < d; ++k) acc[static_cast<std::size_t>(k)] += ring[static_cast<std::size_t>(k)];
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (const auto& c : acc) coeffs.push_back(Rational(c) / static_cast<long>(G.size()));
  return rational_to_integer(CycNum::from_group_ring(static_cast<unsigned>(d), coeffs), "character sum");
}

}  // namespace

Integer chi(const SymmetryGroup& G, const KClass& x, const KClass& y, long cap_factor) {
  if (x.space != y.space) throw MathError("Euler pairing of classes on different spaces");
  switch (x.space) {
    case Space::BG:
      return character_sum(G, x, y, false);
    case Space::YMinus:
    case Space::MF:
      return character_sum(G, x, y, true);
    case Space::PG:
      return chi_pg_classes(G, x, y, 0, cap_factor);
    case Space::YPlus:
    case Space::ZAmbient:
      require_convex(G, x.space);
      return chi_pg_classes(G, x, y, 0, cap_factor) - chi_pg_classes(G, x, y, -G.model().degree, cap_factor);
    default:
      throw MathError("no Euler pairing on " + space_name(x.space));
  }
}

}  // namespace lgcy
