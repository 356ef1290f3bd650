#include "lgcy/statespace.hpp"

namespace lgcy {

std::string space_name(Space s) {
  switch (s) {
    case Space::YMinus: return "YMinus";
    case Space::YPlus: return "YPlus";
    case Space::PG: return "PG";
    case Space::ZAmbient: return "ZAmbient";
    case Space::FJRW: return "FJRW";
    case Space::BG: return "BG";
    case Space::MF: return "MF";
  }
  return "?";
}

int sector_cap(const SymmetryGroup& G, Space s, int g) {
  switch (s) {
    case Space::YMinus:
    case Space::BG:
      return 1;
    case Space::FJRW:
    case Space::MF:
      return G.narrow(g) ? 1 : 0;
    case Space::PG:
    case Space::YPlus:
      return G.fixed_rank(g);
    case Space::ZAmbient:
      return std::max(0, G.fixed_rank(g) - 1);
  }
  return 0;
}

void require_convex(const SymmetryGroup& G, Space s) {
  if ((s == Space::YPlus || s == Space::ZAmbient) && !G.predicates().convex_od)
    throw ModelError(space_name(s) + " requires O(d) to be pulled back from the coarse space");
}

std::vector<SectorBasisElt> basis(const SymmetryGroup& G, Space s) {
  require_convex(G, s);
  std::vector<SectorBasisElt> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    int g = static_cast<int>(i);
    Rational age = G.age(g);
    switch (s) {
      case Space::YMinus:
      case Space::BG:
        out.push_back({s, g, 0, 2 * age});
        break;
      case Space::FJRW:
      case Space::MF:
        if (G.narrow(g)) out.push_back({s, g, 0, 2 * (age - G.model().sum_q())});
        break;
      default:
        for (int k = 0; k < sector_cap(G, s, g); ++k) out.push_back({s, g, k, 2 * (k + age)});
    }
  }
  return out;
}

std::vector<SectorBasisElt> narrow_basis(const SymmetryGroup& G, Space s) {
  std::vector<SectorBasisElt> out;
  switch (s) {
    case Space::YMinus:
    case Space::FJRW:
      for (const auto& e : basis(G, s))
        if (G.narrow(e.g)) out.push_back(e);
      return out;
    case Space::YPlus:
      for (const auto& e : basis(G, s))
        if (e.h_power >= 1) out.push_back(e);
      return out;
    default:
      throw MathError("narrow_basis is defined for YMinus, YPlus and FJRW only");
  }
}

int fjrw_broad_sector_count(const SymmetryGroup& G) {
  return static_cast<int>(G.size() - G.narrow_elements().size());
}

Rational pg_sector_integral(const SymmetryGroup& G, int g) {
  Integer denom(static_cast<long>(G.gbar().size()));
  for (int j : G.fixed_coords(g)) denom *= G.model().weights[static_cast<std::size_t>(j)];
  return Rational(1) / Rational(denom);
}

Rational grading(const SymmetryGroup& G, Space s, int g, int h_power) {
  Rational age = G.age(g);
  if (s == Space::FJRW || s == Space::MF) return age - G.model().sum_q();
  return age + h_power;
}

Rational half_deg0(const SymmetryGroup& G, Space s, int h_power) {
  if (s == Space::FJRW || s == Space::MF) return -G.model().sum_q();
  return Rational(h_power);
}

Rational central_charge(const SymmetryGroup& G, Space s) {
  const int n = G.model().n_vars();
  switch (s) {
    case Space::PG: return Rational(n - 1);
    case Space::YMinus:
    case Space::YPlus:
    case Space::BG:
      return Rational(n);
    case Space::ZAmbient: return Rational(n - 2);
    case Space::FJRW:
    case Space::MF:
      return n - 2 * G.model().sum_q();
  }
  return Rational(0);
}

BundleDegrees fjrw_bundle_degrees(const SymmetryGroup& G, int genus, const std::vector<int>& insertions) {
  const int n = static_cast<int>(insertions.size());
  if (2 * genus - 2 + n < 0) throw MathError("unstable genus/marking data: 2h - 2 + n < 0");
  BundleDegrees out{{}, true, true};
  int broad = 0;
  for (int g : insertions) broad += G.narrow(g) ? 0 : 1;
  for (int j = 0; j < G.model().n_vars(); ++j) {
    Rational deg = G.model().q(j) * (2 * genus - 2 + n);
    for (int g : insertions) deg -= G.m(g, j);
    if (!is_integer(deg)) out.nonempty = false;
    if (sgn(deg) >= 0) out.concave = false;
    out.degrees.push_back(deg);
  }
  if (genus != 0 || broad > 1) out.concave = false;
  return out;
}

}  // namespace lgcy
