#include "lgcy/gamma.hpp"
#include "support.hpp"

namespace lgcy::test {
namespace {

const PrecComplex kOne = PrecComplex(1);

CycNum xi5(long k) { return CycNum::root_of_unity(5, k); }

KClass shift(const KClass& x, long dk, int dzeta, const SymmetryGroup& G) {
  KClass r{x.space, {}};
  for (const auto& [c, n] : x.terms) r.add({c.k1 + dk, G.char_add(c.zeta, dzeta), c.k2}, n);
  return r;
}

TEST(OrbCh, ClassifyingStackCharacterTable) {
  const auto& G = quintic();
  for (long k = -6; k <= 6; ++k) {
    const auto v = orb_ch(G, KClass::line(Space::BG, k));
    for (long m = 0; m < 5; ++m) EXPECT_EQ((*v.at(jpow(G, m)))[0], xi5(k * m)) << k << " " << m;
  }
}

TEST(OrbCh, HyperplaneBundleOnP4) {
  const auto& G = quintic();
  const auto v = orb_ch(G, KClass::line(Space::PG, 1));
  EXPECT_EQ(*v.at(G.identity()), exp_linear<CycNum>(5, CycNum(1)));
}

TEST(OrbCh, IsotropyCharacterOnTwistedSectors) {
  const auto& G = quintic25();
  for (int z = 0; z < static_cast<int>(G.num_characters()); ++z) {
    const auto v = orb_ch(G, KClass::line(Space::PG, 0, z));
    for (const auto& [g, p] : v.comp) {
      EXPECT_EQ(p[0], G.character_value(0, z, g));
      for (int k = 1; k < p.cap(); ++k) EXPECT_TRUE(p[k].is_zero());
    }
  }
}

TEST(OrbCh, KoszulOnYMinusAtJ) {
  const auto& G = quintic();
  const auto v = ch_koszul_minus(G, {0, 0, 0});
  CycNum expected(1);
  for (int i = 0; i < 5; ++i) expected *= CycNum(1) - xi5(-1);
  EXPECT_EQ((*v.at(G.j()))[0], expected);
  EXPECT_EQ(v.at(G.identity()), nullptr);
}

TEST(OrbCh, KoszulOnFJRWAtJ) {
  const auto& G = quintic();
  const auto v = ch_mf_koszul(G, {0, 0, 0});
  CycNum expected(1);
  for (int i = 0; i < 5; ++i) expected *= CycNum(1) - xi5(-1);
  EXPECT_EQ((*v.at(G.j()))[0], expected);
}

TEST(OrbCh, KoszulMatchesExteriorPowerExpansion) {
  for (const auto& m : baseline_models()) {
    const auto& G = *m.group;
    for (int z = 0; z < static_cast<int>(G.num_characters()); ++z)
      for (long k = -2; k <= 2; ++k) {
        auto brute = orb_ch(G, koszul_kclass(G, Space::BG, {k, z, 0}));
        brute.space = Space::YMinus;
        EXPECT_EQ(ch_koszul_minus(G, {k, z, 0}), brute) << m.name;
        for (const auto& [g, p] : ch_koszul_minus(G, {k, z, 0}).comp) EXPECT_TRUE(G.narrow(g)) << m.name;
      }
  }
}

TEST(OrbCh, MFCharacterTwistMultipliesByCharacter) {
  const auto& G = quintic25();
  const auto base = ch_mf_koszul(G, {0, 0, 0});
  for (int z = 0; z < static_cast<int>(G.num_characters()); ++z)
    for (long k = -3; k <= 3; ++k) {
      const auto tw = ch_mf_koszul(G, {k, z, 0});
      for (const auto& [g, p] : base.comp) EXPECT_EQ((*tw.at(g))[0], p[0] * G.character_value(k, z, g));
    }
}

TEST(ToddEuler, QuinticUntwisted) {
  const auto& G = quintic();
  const auto te = todd_and_euler(G);
  EXPECT_EQ(*te.todd.at(G.identity()),
            (NilPoly<CycNum>(5, {1, make_rational(-5, 2), make_rational(25, 12), 0, make_rational(-625, 720)})));
  EXPECT_EQ(*te.euler.at(G.identity()), NilPoly<CycNum>::monomial(5, 1, -5));
}

TEST(OrbCh, PushforwardOfStructureSheafOnYPlus) {
  const auto& G = quintic();
  const auto v = orb_ch(G, KClass::line(Space::YPlus, 0));
  EXPECT_EQ(*v.at(G.identity()), NilPoly<CycNum>::constant(5, 1) - exp_linear<CycNum>(5, CycNum(5)));
}

TEST(GammaClass, P4Untwisted) {
  const auto g = gamma_class(quintic(), Space::PG, 50);
  const auto& p = *g.at(quintic().identity());
  EXPECT_TRUE(distance(p[0], kOne) < tol(45));
  EXPECT_TRUE(distance(p[1], num("-2.88607832450766430303256045041201215521079667969961799402884")) < tol(44));
  EXPECT_TRUE(distance(p[2], num("8.27705921471704952016073962105561580629008900613736788372431")) < tol(44));
}

TEST(GammaClass, FJRWAtJ) {
  const auto g = gamma_class(quintic(), Space::FJRW, 50);
  EXPECT_TRUE(distance((*g.at(quintic().j()))[0],
                       num("2.13891436021622712776692376751157474802754242818808218574071")) < tol(44));
}

TEST(GammaClass, TrivialSectorOfYMinusIsOne) {
  const auto g = gamma_class(quintic(), Space::YMinus, 50);
  EXPECT_TRUE(distance((*g.at(quintic().identity()))[0], kOne) < tol(45));
}

TEST(GammaClass, ConstantTermsMatchDirectGamma) {
  for (const auto& m : baseline_models()) {
    const auto& G = *m.group;
    for (Space s : {Space::PG, Space::YMinus, Space::FJRW, Space::YPlus}) {
      const auto v = gamma_class(G, s, 50);
      for (const auto& [g, p] : v.comp) {
        Real direct(1);
        for (int c = 0; c < G.model().n_vars(); ++c)
          direct *= gamma(Real::from_rational(1 - G.m(g, c), digits_to_bits(60)));
        EXPECT_TRUE(distance(p[0], PrecComplex(direct, Real(Prec{digits_to_bits(60)}))) < tol(45))
            << m.name << " " << space_name(s);
      }
    }
  }
}

TEST(FlatFrame, StructureSheafOnP4) {
  const auto& G = quintic();
  const auto f = flat_frame(G, KClass::line(Space::PG, 0), PrecComplex(0), 50);
  EXPECT_EQ(f.chat, 4);
  const auto gam = gamma_class(G, Space::PG, 50);
  const PrecComplex tpi = PrecComplex::two_pi_i(50);
  PrecComplex norm(1);
  for (int i = 0; i < 4; ++i) norm /= tpi;
  const auto& v = *f.v.at(G.identity());
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(distance(v[k], norm * (*gam.at(G.identity()))[k]) < tol(45)) << k;
}

TEST(FlatFrame, PointStackIsOne) {
  const auto G = SymmetryGroup::closure(LGModel({1}, 1), {});
  const auto f = flat_frame(G, KClass::line(Space::BG, 0), PrecComplex(0), 50);
  ASSERT_NE(f.v.at(G.identity()), nullptr);
  EXPECT_TRUE(distance((*f.v.at(G.identity()))[0], kOne) < tol(45));
}

TEST(GammaPairing, P4StructureSheafAndHyperplane) {
  const auto& G = quintic();
  const Real t = tol(20);
  const auto r = verify_gamma_pairing(
      G, {{KClass::line(Space::PG, 0), KClass::line(Space::PG, 0)}, {KClass::line(Space::PG, 0), KClass::line(Space::PG, 1)}},
      kOne, 50, t);
  EXPECT_TRUE(r.passed) << (r.witnesses.empty() ? "" : r.witnesses[0]);
  EXPECT_EQ(r.cases, 2);
}

TEST(GammaPairing, QuinticMatrixFactorizationSelfPairing) {
  const auto& G = quintic();
  const auto r = verify_gamma_pairing(G, {{KClass::line(Space::MF, 0), KClass::line(Space::MF, 0)}}, kOne, 50, tol(20));
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(distance(pairing_phase(G, Space::MF, 50), kOne) < tol(45));
}

TEST(GammaPairing, WrongPhaseIsDetected) {
  const auto& G = quintic();
  // The ZAmbient and FJRW phases differ by -1 for the quintic.
  EXPECT_TRUE(distance(pairing_phase(G, Space::ZAmbient, 50) * pairing_phase(G, Space::MF, 50).conj(), PrecComplex(-1)) <
              tol(45));
}

TEST(LatticeRank, Examples) {
  const auto& G = quintic();
  std::vector<KClass> ym, pg;
  for (long k = 0; k < 5; ++k) {
    ym.push_back(KClass::line(Space::YMinus, k));
    pg.push_back(KClass::line(Space::PG, k));
  }
  EXPECT_EQ(lattice_rank(G, ym), 4u);
  EXPECT_EQ(lattice_rank(G, pg), 5u);
  EXPECT_EQ(lattice_rank(G, {}), 0u);
}

class ChernProperties : public testing::TestWithParam<NamedModel> {};

TEST_P(ChernProperties, RingMapOnLineBundles) {
  const auto& G = *GetParam().group;
  Gen gen(0xc401);
  for (Space s : {Space::BG, Space::PG}) {
    for (int t = 0; t < 20; ++t) {
      const long k1 = gen.integer(-8, 8), k2 = gen.integer(-8, 8);
      const int z1 = static_cast<int>(gen.integer(0, long(G.num_characters()) - 1));
      const int z2 = static_cast<int>(gen.integer(0, long(G.num_characters()) - 1));
      const auto prod = sector_product(orb_ch(G, KClass::line(s, k1, z1)), orb_ch(G, KClass::line(s, k2, z2)));
      EXPECT_EQ(orb_ch(G, KClass::line(s, k1 + k2, G.char_add(z1, z2))), prod) << space_name(s);
    }
  }
}

TEST_P(ChernProperties, GrothendieckRiemannRochOnYPlus) {
  const auto& G = *GetParam().group;
  Gen gen(0xc402);
  const long d = G.model().degree;
  for (int t = 0; t < 20; ++t) {
    const KClass x = gen.kclass(G, Space::PG, -8, 8, 3);
    auto expected = orb_ch(G, x) - orb_ch(G, shift(x, d, 0, G));
    expected.space = Space::YPlus;
    EXPECT_EQ(orb_ch(G, x.retagged(Space::YPlus)), expected);
  }
}

TEST_P(ChernProperties, KawasakiMatchesMonomialCounting) {
  const auto& G = *GetParam().group;
  const long d = G.model().degree;
  const auto r = verify_pg_chi(G, -d, d, 2 * d);
  EXPECT_TRUE(r.passed) << (r.witnesses.empty() ? "" : r.witnesses[0]);
  EXPECT_GT(r.cases, 0);
}

TEST_P(ChernProperties, GammaPairingOnRandomLinePairs) {
  const auto& G = *GetParam().group;
  Gen gen(0xc403);
  for (Space s : {Space::PG, Space::YMinus, Space::YPlus, Space::MF}) {
    std::vector<std::pair<KClass, KClass>> pairs;
    for (int t = 0; t < 6; ++t) pairs.push_back({gen.kclass(G, s, -4, 4, 2), gen.kclass(G, s, -4, 4, 2)});
    const auto r = verify_gamma_pairing(G, pairs, PrecComplex::from_parts(make_rational(3, 2), make_rational(1, 3), 50),
                                        50, tol(20));
    EXPECT_TRUE(r.passed) << space_name(s) << " " << (r.witnesses.empty() ? "" : r.witnesses[0]);
  }
}

INSTANTIATE_TEST_SUITE_P(Baseline, ChernProperties, testing::ValuesIn(baseline_models()), model_name);

}  // namespace
}  // namespace lgcy::test
