#include "lgcy/transforms.hpp"
#include "support.hpp"

namespace lgcy::test {
namespace {

CRVector<CycNum> unit(const SymmetryGroup& G, Space s, int g, int h_power, CycNum c = 1) {
  CRVector<CycNum> v{s, {}};
  v.add(g, NilPoly<CycNum>::monomial(sector_cap(G, s, g), h_power, c));
  return v;
}

std::string first(const CheckReport& r) { return r.witnesses.empty() ? "" : r.witnesses[0]; }

TEST(DeltaMinus, RelabelsJ) {
  const auto& G = quintic();
  EXPECT_EQ(delta_minus(G, unit(G, Space::YMinus, G.j(), 0)), unit(G, Space::FJRW, G.j(), 0));
}

TEST(DeltaMinus, IsometryAndInverse) {
  const auto& G = quintic25();
  Gen gen(0xd101);
  const auto nar = G.narrow_elements();
  for (int t = 0; t < 20; ++t) {
    CRVector<CycNum> a{Space::YMinus, {}}, b{Space::YMinus, {}};
    for (int g : nar) {
      a.add(g, NilPoly<CycNum>::constant(1, gen.cyc(5)));
      b.add(g, NilPoly<CycNum>::constant(1, gen.cyc(5)));
    }
    EXPECT_EQ(pair(G, delta_minus(G, a), delta_minus(G, b)), pair(G, a, b));
    EXPECT_EQ(delta_minus_inverse(G, delta_minus(G, a)), a);
  }
}

TEST(DeltaMinus, RejectsBroadInput) {
  const auto& G = quintic();
  EXPECT_THROW(delta_minus(G, unit(G, Space::YMinus, G.identity(), 0)), MathError);
}

TEST(DeltaPlus, QuinticHyperplaneClasses) {
  const auto& G = quintic();
  const CycNum f(make_rational(-1, 5));
  EXPECT_EQ(delta_plus(G, unit(G, Space::YPlus, 0, 1)), unit(G, Space::ZAmbient, 0, 0, f));
  EXPECT_EQ(delta_plus(G, unit(G, Space::YPlus, 0, 4)), unit(G, Space::ZAmbient, 0, 3, f));
}

TEST(DeltaPlus, RejectsConstantTerm) {
  const auto& G = quintic();
  EXPECT_THROW(delta_plus(G, unit(G, Space::YPlus, 0, 0)), MathError);
}

TEST(DeltaMaps, SquareAndInvertible) {
  for (const auto& m : baseline_models()) {
    const auto& G = *m.group;
    for (const auto& sm : {delta_minus_map(G), delta_plus_map(G)}) {
      ASSERT_EQ(sm.m.rows(), sm.m.cols()) << m.name << " " << sm.name;
      EXPECT_FALSE(determinant(sm.m).is_zero()) << m.name << " " << sm.name;
    }
  }
}

TEST(UBar, QuinticIdentityImage) {
  const auto& G = quintic();
  const auto v = u_bar_image_equivariant(G, 0, G.identity());
  ExpPoly<CycNum> expected(5);
  for (long k = 0; k < 5; ++k) expected += exp_h_lambda<CycNum>(5, k);
  expected *= CycNum(make_rational(1, 5));
  ASSERT_EQ(v.comp.size(), 1u);
  EXPECT_EQ(*v.at(G.identity()), expected);
}

TEST(UBar, NarrowInputHasNoConstantTerms) {
  for (const auto& m : baseline_models()) {
    const auto& G = *m.group;
    for (long l = -3; l <= 3; ++l)
      for (int g : G.narrow_elements())
        for (const auto& [h, p] : u_bar_image(G, l, g).comp) EXPECT_TRUE(p[0].is_zero()) << m.name;
  }
}

TEST(UBar, WindowShiftByDegreeMultipliesByTwist) {
  for (const auto& m : baseline_models()) {
    const auto& G = *m.group;
    const long d = G.model().degree;
    for (long l = -2; l <= 2; ++l)
      for (int g = 0; g < static_cast<int>(G.size()); ++g) {
        const auto base = u_bar_image_equivariant(G, l, g);
        const auto shifted = u_bar_image_equivariant(G, l + d, g);
        EqCRVector<CycNum> expected{base.space, {}};
        for (const auto& [h, e] : base.comp) expected.add(h, e * exp_h_lambda<CycNum>(e.cap(), d));
        EXPECT_EQ(shifted, expected) << m.name << " l=" << l;
      }
  }
}

TEST(UBar, LinearInInput) {
  const auto& G = quintic25();
  Gen gen(0xd102);
  for (int t = 0; t < 5; ++t) {
    CRVector<CycNum> a{Space::YMinus, {}}, b{Space::YMinus, {}};
    for (int g = 0; g < static_cast<int>(G.size()); ++g) {
      a.add(g, NilPoly<CycNum>::constant(1, gen.cyc(5)));
      b.add(g, NilPoly<CycNum>::constant(1, gen.cyc(5)));
    }
    const long l = gen.integer(-5, 5);
    EXPECT_EQ(apply_u_bar(G, l, a + b), apply_u_bar(G, l, a) + apply_u_bar(G, l, b));
  }
}

TEST(Induced, QuinticWindowZero) {
  const auto r = verify_induced(quintic(), 0);
  EXPECT_TRUE(r.passed) << first(r);
  EXPECT_EQ(r.cases, 5);
}

TEST(Induced, P112AllWindows) {
  for (long l = -4; l <= 4; ++l) {
    const auto r = verify_induced(p112(), l);
    EXPECT_TRUE(r.passed) << l << " " << first(r);
  }
}

TEST(Squares, DeltaSquareOnAllCharacters) {
  for (const auto& m : baseline_models()) {
    const auto r = verify_delta_square(*m.group);
    EXPECT_TRUE(r.passed) << m.name << " " << first(r);
  }
  EXPECT_EQ(verify_delta_square(quintic25()).cases, 25 * 2);
}

TEST(Squares, QuantumSerreSquare) {
  for (const auto& m : baseline_models()) {
    const long d = m.group->model().degree;
    const auto r = verify_qsd_square(*m.group, -d, 2 * d);
    EXPECT_TRUE(r.passed) << m.name << " " << first(r);
  }
}

TEST(Squares, QuinticKSquareWindowZero) {
  const auto r = verify_ksquare(quintic(), 0);
  EXPECT_TRUE(r.passed) << first(r);
  EXPECT_EQ(r.cases, 5);
}

TEST(Squares, KSquareAllWindows) {
  for (const auto& m : {NamedModel{"M2", &p112()}, NamedModel{"M3", &quintic25()}})
    for (long l = -5; l <= 5; ++l) {
      const auto r = verify_ksquare(*m.group, l);
      EXPECT_TRUE(r.passed) << m.name << " " << l << " " << first(r);
    }
}

TEST(LgcyMatrix, QuinticWindowZeroShape) {
  const auto sm = lgcy_matrix(quintic(), 0, PrecComplex(0), 50);
  EXPECT_EQ(sm.m.rows(), 4u);
  EXPECT_EQ(sm.m.cols(), 4u);
}

TEST(LgcyMatrix, ZeroMapsToZero) {
  const auto& G = quintic();
  const auto out = lgcy_apply(G, 0, CRVector<PrecComplex>{Space::FJRW, {}}, PrecComplex(0), 50);
  EXPECT_TRUE(out.is_zero());
}

TEST(LgcyPairing, SignAtUnitZ) {
  for (const auto& m : {NamedModel{"M1", &quintic()}, NamedModel{"M3", &quintic25()}})
    for (long l : {0L, 1L}) {
      const auto r = verify_lgcy_pairing(*m.group, l, PrecComplex(1), 50, tol(20));
      EXPECT_TRUE(r.passed) << m.name << " " << first(r);
    }
}

TEST(LgcyPairing, SignAtGenericZ) {
  const PrecComplex z = PrecComplex::from_parts(make_rational(3, 2), make_rational(1, 3), 50);
  const auto r = verify_lgcy_pairing(quintic(), 2, z, 50, tol(20));
  EXPECT_TRUE(r.passed) << first(r);
}

class TransformProperties : public testing::TestWithParam<NamedModel> {};

TEST_P(TransformProperties, NarrowUBarIsInvertible) {
  for (long l = -5; l <= 5; ++l) {
    const auto r = verify_u_bar_narrow(*GetParam().group, l);
    EXPECT_TRUE(r.passed) << l << " " << first(r);
  }
}

TEST_P(TransformProperties, ChiPreservation) {
  for (long l = -2; l <= 2; ++l) {
    const auto r = verify_chi_preservation(*GetParam().group, l);
    EXPECT_TRUE(r.passed) << l << " " << first(r);
  }
}

INSTANTIATE_TEST_SUITE_P(Baseline, TransformProperties, testing::ValuesIn(baseline_models()), model_name);

}  // namespace
}  // namespace lgcy::test
