#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "lgcy/chern.hpp"
#include "lgcy/kclass.hpp"
#include "lgcy/model.hpp"

namespace lgcy::test {

inline const SymmetryGroup& quintic() {
  static const SymmetryGroup G = SymmetryGroup::closure(LGModel({1, 1, 1, 1, 1}, 5), {});
  return G;
}

inline const SymmetryGroup& p112() {
  static const SymmetryGroup G = SymmetryGroup::closure(LGModel({1, 1, 2}, 4), {});
  return G;
}

inline const SymmetryGroup& quintic25() {
  static const SymmetryGroup G =
      SymmetryGroup::closure(LGModel({1, 1, 1, 1, 1}, 5), {GroupElement{{0, 1, 4, 0, 0}}});
  return G;
}

struct NamedModel {
  std::string name;
  const SymmetryGroup* group;
};

inline std::vector<NamedModel> baseline_models() {
  return {{"M1", &quintic()}, {"M2", &p112()}, {"M3", &quintic25()}};
}

inline std::string model_name(const testing::TestParamInfo<NamedModel>& info) { return info.param.name; }

// Fixed-seed generator so property failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long span, long max_den) {
    return make_rational(integer(-span, span), integer(1, max_den));
  }
  CycNum cyc(unsigned order, long span = 5, long max_den = 4) {
    std::vector<Rational> c(order);
    for (auto& x : c) x = rational(span, max_den);
    return CycNum::from_group_ring(order, c);
  }
  KClass kclass(const SymmetryGroup& G, Space s, long kmin, long kmax, int terms) {
    KClass x{s, {}};
    for (int i = 0; i < terms; ++i)
      x.add({integer(kmin, kmax), static_cast<int>(integer(0, long(G.num_characters()) - 1)), 0}, integer(-3, 3));
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

inline int jpow(const SymmetryGroup& G, long k) { return G.pow(G.j(), k); }

inline Real tol(long exponent) { return Real::pow10(-exponent, digits_to_bits(60)); }

inline Real distance(const PrecComplex& a, const PrecComplex& b) { return (a - b).abs(); }

inline PrecComplex num(const std::string& re, int digits = 60) {
  return {Real::from_string(re, digits_to_bits(digits)), Real(Prec{digits_to_bits(digits)})};
}

}  // namespace lgcy::test
