#include <map>
#include <set>

#include "lgcy/matrix.hpp"
#include "lgcy/statespace.hpp"
#include "support.hpp"

namespace lgcy::test {
namespace {

CRVector<CycNum> unit(const SymmetryGroup& G, Space s, int g, int h_power, CycNum c = 1) {
  CRVector<CycNum> v{s, {}};
  v.add(g, NilPoly<CycNum>::monomial(sector_cap(G, s, g), h_power, c));
  return v;
}

TEST(Basis, QuinticYMinusHasFiveSectors) {
  const auto b = basis(quintic(), Space::YMinus);
  EXPECT_EQ(b.size(), 5u);
  for (const auto& e : b) EXPECT_EQ(e.h_power, 0);
}

TEST(Basis, QuinticPGIsCohomologyOfP4) {
  const auto& G = quintic();
  const auto b = basis(G, Space::PG);
  ASSERT_EQ(b.size(), 5u);
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(b[k].g, G.identity());
    EXPECT_EQ(b[k].h_power, k);
  }
}

TEST(Basis, QuinticFJRWNarrow) {
  const auto& G = quintic();
  const auto b = narrow_basis(G, Space::FJRW);
  std::set<int> keys;
  for (const auto& e : b) keys.insert(e.g);
  EXPECT_EQ(keys, std::set<int>({jpow(G, 1), jpow(G, 2), jpow(G, 3), jpow(G, 4)}));
}

TEST(NarrowBasis, QuinticYMinus) { EXPECT_EQ(narrow_basis(quintic(), Space::YMinus).size(), 4u); }

TEST(NarrowBasis, QuinticYPlusDropsConstants) {
  const auto b = narrow_basis(quintic(), Space::YPlus);
  ASSERT_EQ(b.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(b[k].h_power, k + 1);
}

TEST(AmbientRestrict, TopPowerDies) {
  const auto& G = quintic();
  EXPECT_TRUE(ambient_restrict(G, unit(G, Space::PG, 0, 4)).is_zero());
  EXPECT_FALSE(ambient_restrict(G, unit(G, Space::PG, 0, 1)).is_zero());
}

TEST(AmbientRestrict, Linearity) {
  const auto& G = quintic();
  auto v = unit(G, Space::PG, 0, 2, 3) + unit(G, Space::PG, 0, 4);
  EXPECT_EQ(ambient_restrict(G, v), unit(G, Space::ZAmbient, 0, 2, 3));
}

TEST(AmbientRestrict, RejectsOtherSpaces) {
  const auto& G = quintic();
  EXPECT_THROW(ambient_restrict(G, unit(G, Space::YPlus, 0, 1)), MathError);
}

TEST(Pairing, QuinticFJRW) {
  const auto& G = quintic();
  EXPECT_EQ(pair(G, unit(G, Space::FJRW, jpow(G, 1), 0), unit(G, Space::FJRW, jpow(G, 4), 0)),
            CycNum(make_rational(1, 5)));
  EXPECT_EQ(pair(G, unit(G, Space::FJRW, jpow(G, 1), 0), unit(G, Space::FJRW, jpow(G, 1), 0)), CycNum(0));
}

TEST(Pairing, P4MiddleClass) {
  const auto& G = quintic();
  EXPECT_EQ(pair(G, unit(G, Space::PG, 0, 2), unit(G, Space::PG, 0, 2)), CycNum(1));
}

TEST(Pairing, P112) {
  const auto& G = p112();
  EXPECT_EQ(pair(G, unit(G, Space::PG, 0, 0), unit(G, Space::PG, 0, 2)), CycNum(make_rational(1, 2)));
}

TEST(Pairing, NarrowPairingRejectsBroadInput) {
  const auto& G = quintic();
  EXPECT_THROW(pair(G, unit(G, Space::YMinus, G.identity(), 0), unit(G, Space::YMinus, G.identity(), 0)),
               MathError);
}

TEST(BundleDegrees, ConcaveTriple) {
  const auto& G = quintic();
  const int j2 = jpow(G, 2);
  const auto r = fjrw_bundle_degrees(G, 0, {j2, j2, j2});
  for (const auto& x : r.degrees) EXPECT_EQ(x, -1);
  EXPECT_TRUE(r.nonempty);
  EXPECT_TRUE(r.concave);
}

TEST(BundleDegrees, NonIntegralMeansEmpty) {
  const auto& G = quintic();
  const auto r = fjrw_bundle_degrees(G, 0, {jpow(G, 1), jpow(G, 1), jpow(G, 3)});
  for (const auto& x : r.degrees) EXPECT_EQ(x, make_rational(-4, 5));
  EXPECT_FALSE(r.nonempty);
}

TEST(BundleDegrees, GenusOneWithoutInsertions) {
  const auto r = fjrw_bundle_degrees(p112(), 1, {});
  for (const auto& x : r.degrees) EXPECT_EQ(x, 0);
  EXPECT_TRUE(r.nonempty);
}

class SpaceInvariants : public testing::TestWithParam<NamedModel> {};

Matrix<CycNum> gram(const SymmetryGroup& G, Space s, const std::vector<SectorBasisElt>& b) {
  Matrix<CycNum> m(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      m(i, k) = pair(G, unit(G, s, b[i].g, b[i].h_power), unit(G, s, b[k].g, b[k].h_power));
  return m;
}

TEST_P(SpaceInvariants, NarrowDimensions) {
  const auto& G = *GetParam().group;
  const std::size_t nar = G.narrow_elements().size();
  EXPECT_EQ(narrow_basis(G, Space::YMinus).size(), nar);
  EXPECT_EQ(narrow_basis(G, Space::FJRW).size(), nar);
  std::size_t amb = 0;
  for (int g = 0; g < static_cast<int>(G.size()); ++g)
    if (G.fixed_rank(g) > 0) amb += static_cast<std::size_t>(G.fixed_rank(g) - 1);
  EXPECT_EQ(narrow_basis(G, Space::YPlus).size(), amb);
  EXPECT_EQ(basis(G, Space::ZAmbient).size(), amb);
}

TEST_P(SpaceInvariants, PairingsAreNondegenerate) {
  const auto& G = *GetParam().group;
  for (Space s : {Space::YPlus, Space::ZAmbient, Space::FJRW, Space::YMinus, Space::PG}) {
    const auto b = s == Space::ZAmbient || s == Space::PG ? basis(G, s) : narrow_basis(G, s);
    EXPECT_FALSE(determinant(gram(G, s, b)).is_zero()) << space_name(s);
  }
}

TEST_P(SpaceInvariants, PGPairingIsSymmetricAndSelective) {
  const auto& G = *GetParam().group;
  const auto b = basis(G, Space::PG);
  const auto m = gram(G, Space::PG, b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_EQ(m(i, k), m(k, i));
      const bool matched = b[k].g == G.inv(b[i].g) && b[i].h_power + b[k].h_power == G.fixed_rank(b[i].g) - 1;
      if (!matched) EXPECT_TRUE(m(i, k).is_zero());
    }
}

TEST_P(SpaceInvariants, DeltaMinusShiftsDegreeByConstant) {
  const auto& G = *GetParam().group;
  const auto ym = narrow_basis(G, Space::YMinus);
  const auto fj = narrow_basis(G, Space::FJRW);
  ASSERT_EQ(ym.size(), fj.size());
  std::map<int, Rational> fdeg;
  for (const auto& e : fj) fdeg[e.g] = e.degree;
  std::set<Rational> shifts;
  for (const auto& e : ym) shifts.insert(fdeg.at(e.g) - e.degree);
  EXPECT_EQ(shifts.size(), 1u);
}

INSTANTIATE_TEST_SUITE_P(Baseline, SpaceInvariants, testing::ValuesIn(baseline_models()), model_name);

}  // namespace
}  // namespace lgcy::test
