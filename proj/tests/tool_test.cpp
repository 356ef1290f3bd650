#include <gtest/gtest.h>

#include "model_file.hpp"

namespace lgcy::tool {
namespace {

constexpr const char* kQuintic25 = R"(name: quintic25
weights: [1, 1, 1, 1, 1]
degree: 5
group:
  generators:
    - [0, 1, 4, 0, 0]
options:
  order: 4
  precision: 60
  l_range: [-2, 3]
)";

std::string error_of(const std::string& text) {
  try {
    parse_model_yaml(text, "m.yaml");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ModelFile, ParsesAllFields) {
  const ModelFile m = parse_model_yaml(kQuintic25, "m.yaml");
  EXPECT_EQ(m.name, "quintic25");
  EXPECT_EQ(m.weights, std::vector<int>({1, 1, 1, 1, 1}));
  EXPECT_EQ(m.degree, 5);
  ASSERT_EQ(m.generators.size(), 1u);
  EXPECT_EQ(m.generators[0].a, std::vector<int>({0, 1, 4, 0, 0}));
  EXPECT_EQ(m.options.order, 4);
  EXPECT_EQ(m.options.precision, 60);
  EXPECT_EQ(m.options.l_range, std::make_pair(-2L, 3L));
  EXPECT_EQ(build_group(m, "m.yaml").size(), 25u);
}

TEST(ModelFile, GeneratorLengthIsLineAnchored) {
  EXPECT_EQ(error_of("weights: [1, 1, 1]\ndegree: 3\ngroup:\n  generators:\n    - [0, 1]\n"),
            "m.yaml:5:7: generator has 2 entries, expected 3");
}

TEST(ModelFile, UnknownKeyIsRejected) {
  EXPECT_EQ(error_of("weights: [1, 1, 1]\ndegree: 3\ncolour: blue\n"), "m.yaml:3:1: unknown key 'colour'");
}

TEST(ModelFile, NonIntegerWeight) {
  EXPECT_EQ(error_of("weights: [1, x, 1]\ndegree: 3\n"), "m.yaml:1:14: weights entry must be an integer, got 'x'");
}

TEST(ModelFile, MissingDegree) { EXPECT_NE(error_of("weights: [1, 1]\n").find("missing 'degree'"), std::string::npos); }

TEST(ModelFile, SyntaxError) { EXPECT_NE(error_of("weights: [1, 1\n").find("m.yaml:"), std::string::npos); }

TEST(ModelFile, EmptyWindowRange) {
  EXPECT_NE(error_of("weights: [1]\ndegree: 1\noptions:\n  l_range: [3, 1]\n").find("l_range"), std::string::npos);
}

TEST(ModelFile, SplittingFailureBecomesParseError) {
  const ModelFile m = parse_model_yaml("weights: [2, 1, 1]\ndegree: 4\n", "m.yaml");
  EXPECT_THROW(build_group(m, "m.yaml"), ParseError);
}

TEST(Fingerprint, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Fingerprint, IndependentOfGeneratingSet) {
  const LGModel q({1, 1, 1, 1, 1}, 5);
  const auto a = SymmetryGroup::closure(q, {GroupElement{{0, 1, 4, 0, 0}}});
  const auto b = SymmetryGroup::closure(q, {GroupElement{{0, 2, 3, 0, 0}}, GroupElement{{1, 1, 1, 1, 1}}});
  EXPECT_EQ(fingerprint(a), fingerprint(b));
  EXPECT_NE(fingerprint(a), fingerprint(SymmetryGroup::closure(q, {})));
  EXPECT_EQ(canonical_form(SymmetryGroup::closure(LGModel({1, 1, 2}, 4), {})),
            "lgcy-model/1;weights=1,1,2;degree=4;elements=(0,0,0)(1,1,1)(2,2,0)(3,3,1)");
}

TEST(LRange, ParsesSignedBounds) {
  EXPECT_EQ(parse_l_range("-5..5"), std::make_pair(-5L, 5L));
  EXPECT_EQ(parse_l_range(" +1 .. 2 "), std::make_pair(1L, 2L));
  EXPECT_THROW(parse_l_range("5..-5"), ParseError);
  EXPECT_THROW(parse_l_range("1-2"), ParseError);
}

}  // namespace
}  // namespace lgcy::tool
