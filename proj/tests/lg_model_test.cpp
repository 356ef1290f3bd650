#include <set>

#include "support.hpp"

namespace lgcy::test {
namespace {

TEST(Gmax, QuinticHasOrder3125) { EXPECT_EQ(SymmetryGroup::gmax(LGModel({1, 1, 1, 1, 1}, 5)).size(), 3125u); }

TEST(Gmax, P112HasOrder32) { EXPECT_EQ(SymmetryGroup::gmax(LGModel({1, 1, 2}, 4)).size(), 32u); }

TEST(Gmax, OneVariableDegreeOneIsTrivial) { EXPECT_EQ(SymmetryGroup::gmax(LGModel({1}, 1)).size(), 1u); }

TEST(Closure, QuinticGeneratedByJ) {
  const auto& G = quintic();
  EXPECT_EQ(G.size(), 5u);
  EXPECT_EQ(G.gbar().size(), 1u);
  EXPECT_EQ(G.element(G.j()).a, std::vector<int>({1, 1, 1, 1, 1}));
}

TEST(Closure, QuinticOrder25) {
  const auto& G = quintic25();
  EXPECT_EQ(G.size(), 25u);
  ASSERT_EQ(G.gbar().size(), 5u);
  const int gen = G.index_of(GroupElement{{0, 1, 4, 0, 0}});
  ASSERT_GE(gen, 0);
  std::set<int> span;
  for (long k = 0; k < 5; ++k) span.insert(G.pow(gen, k));
  EXPECT_EQ(span, std::set<int>(G.gbar().begin(), G.gbar().end()));
}

TEST(Closure, P112JActsByIIMinusOne) {
  const auto& G = p112();
  EXPECT_EQ(G.size(), 4u);
  const int j = G.j();
  EXPECT_EQ(G.m(j, 0), make_rational(1, 4));
  EXPECT_EQ(G.m(j, 1), make_rational(1, 4));
  EXPECT_EQ(G.m(j, 2), make_rational(1, 2));
  EXPECT_EQ(G.coord_exponent(j, 2), 2);
}

TEST(Closure, FirstWeightMustBeOne) {
  EXPECT_THROW(SymmetryGroup::closure(LGModel({2, 1, 1}, 4), {}), ModelError);
}

TEST(Closure, SizeCapIsEnforced) {
  EXPECT_THROW(SymmetryGroup::closure(LGModel({1, 1, 1, 1, 1}, 5), {GroupElement{{1, 0, 0, 0, 0}}}, 10), ModelError);
}

TEST(Classify, QuinticJ) {
  const auto c = quintic().classify(quintic().j());
  EXPECT_TRUE(c.narrow);
  EXPECT_EQ(c.fixed_rank, 0);
  EXPECT_EQ(c.age, 1);
}

TEST(Classify, QuinticIdentity) {
  const auto c = quintic().classify(quintic().identity());
  EXPECT_FALSE(c.narrow);
  EXPECT_EQ(c.fixed_rank, 5);
  EXPECT_EQ(c.age, 0);
}

TEST(Classify, P112JSquared) {
  const auto& G = p112();
  const auto c = G.classify(jpow(G, 2));
  EXPECT_FALSE(c.narrow);
  EXPECT_EQ(c.fixed_rank, 1);
  EXPECT_EQ(c.age, 1);
}

TEST(Predicates, Quintic) {
  const auto p = quintic().predicates();
  EXPECT_TRUE(p.quasi_cy);
  EXPECT_TRUE(p.in_sl);
  EXPECT_TRUE(p.convex_od);
}

TEST(Predicates, P112) {
  const auto p = p112().predicates();
  EXPECT_TRUE(p.quasi_cy);
  EXPECT_TRUE(p.in_sl);
}

TEST(Predicates, CubicInDegreeFiveIsNotQuasiCY) {
  EXPECT_FALSE(SymmetryGroup::closure(LGModel({1, 1, 1}, 5), {}).predicates().quasi_cy);
}

class GroupInvariants : public testing::TestWithParam<NamedModel> {};

TEST_P(GroupInvariants, AgeAndNarrowUnderInversion) {
  const auto& G = *GetParam().group;
  const int n = G.model().n_vars();
  for (int g = 0; g < static_cast<int>(G.size()); ++g) {
    EXPECT_EQ(G.narrow(g), G.narrow(G.inv(g)));
    EXPECT_EQ(G.age(g) + G.age(G.inv(g)), n - G.fixed_rank(g));
    EXPECT_EQ(G.mul(g, G.inv(g)), G.identity());
  }
}

TEST_P(GroupInvariants, JHasMultiplicitiesQ) {
  const auto& G = *GetParam().group;
  for (int c = 0; c < G.model().n_vars(); ++c) EXPECT_EQ(G.m(G.j(), c), G.model().q(c));
  EXPECT_EQ(G.age(G.j()), 1);
}

TEST_P(GroupInvariants, SplittingIsABijection) {
  const auto& G = *GetParam().group;
  const int d = G.model().degree;
  EXPECT_EQ(G.size(), static_cast<std::size_t>(d) * G.gbar().size());
  std::set<int> seen;
  for (int r = 0; r < d; ++r)
    for (int gb : G.gbar()) {
      const int g = G.element_from_split(r, gb);
      EXPECT_EQ(G.r_of(g), r);
      EXPECT_EQ(G.gbar_of(g), gb);
      seen.insert(g);
    }
  EXPECT_EQ(seen.size(), G.size());
  for (int gb : G.gbar()) EXPECT_EQ(G.m(gb, 0), 0);
}

TEST_P(GroupInvariants, CharacterGroupIsDualToGbar) {
  const auto& G = *GetParam().group;
  EXPECT_EQ(G.num_characters(), G.gbar().size());
  Gen gen(0x1a);
  for (int t = 0; t < 30; ++t) {
    const int x = static_cast<int>(gen.integer(0, long(G.num_characters()) - 1));
    const int y = static_cast<int>(gen.integer(0, long(G.num_characters()) - 1));
    const int g = static_cast<int>(gen.integer(0, long(G.size()) - 1));
    const long k = gen.integer(-7, 7);
    EXPECT_EQ(G.character_value(k, G.char_add(x, y), g),
              G.character_value(k, x, g) * G.character_value(0, y, g));
    EXPECT_EQ(G.character_value(0, G.char_neg(x), g) * G.character_value(0, x, g), CycNum(1));
  }
}

INSTANTIATE_TEST_SUITE_P(Baseline, GroupInvariants, testing::ValuesIn(baseline_models()), model_name);

}  // namespace
}  // namespace lgcy::test
