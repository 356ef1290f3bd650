// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lgcy/chern.hpp"
#include "lgcy/ifunction.hpp"
#include "lgcy/suite.hpp"
#include "lgcy/transforms.hpp"

namespace {

using namespace lgcy;

struct Model {
  const char* name;
  SymmetryGroup G;
};

std::vector<Model> baseline() {
  const LGModel quintic({1, 1, 1, 1, 1}, 5);
  std::vector<Model> ms;
  ms.push_back({"M1", SymmetryGroup::closure(quintic, {})});
  ms.push_back({"M2", SymmetryGroup::closure(LGModel({1, 1, 2}, 4), {})});
  ms.push_back({"M3", SymmetryGroup::closure(quintic, {GroupElement{{0, 1, 4, 0, 0}}})});
  return ms;
}

constexpr int kDigits = 50;
constexpr long kLMin = -5, kLMax = 5;

struct Outcome {
  bool passed = true;
  std::string detail;

  void absorb(const std::string& where, const CheckReport& r) {
    if (!r.passed) {
      passed = false;
      if (detail.empty()) detail = where + ": " + (r.witnesses.empty() ? r.name : r.witnesses[0]);
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (detail.empty()) detail = what;
    }
  }
};

Real tolerance(long e) { return Real::pow10(-e, digits_to_bits(kDigits)); }

KClass combo(Space s, std::initializer_list<std::pair<long, long>> terms) {
  KClass x{s, {}};
  for (auto [k, n] : terms) x.add({k, 0, 0}, n);
  return x;
}

Outcome window_values(const std::vector<Model>& ms) {
  Outcome o;
  const auto& G = ms[0].G;
  o.require(vgit_l(G, KClass::line(Space::YMinus, 5), {0}) == combo(Space::YPlus, {{0, 1}}), "vgit_0 O(5)");
  o.require(vgit_l(G, KClass::line(Space::YMinus, 6), {0}) == combo(Space::YPlus, {{1, 1}, {0, -5}}), "vgit_0 O(6)");
  return o;
}

Outcome per_model_window(const std::vector<Model>& ms, CheckReport (*f)(const SymmetryGroup&, long)) {
  Outcome o;
  for (const auto& m : ms)
    for (long l = kLMin; l <= kLMax; ++l) o.absorb(std::string(m.name) + " l=" + std::to_string(l), f(m.G, l));
  return o;
}

Outcome delta_square(const std::vector<Model>& ms) {
  Outcome o;
  for (const auto& m : ms) o.absorb(m.name, verify_delta_square(m.G));
  return o;
}

Outcome qsd_square(const std::vector<Model>& ms) {
  Outcome o;
  for (const auto& m : ms) {
    const long d = m.G.model().degree;
    o.absorb(m.name, verify_qsd_square(m.G, -d, 2 * d));
  }
  return o;
}

Outcome pairing_normalization(const std::vector<Model>& ms) {
  Outcome o;
  for (const auto* m : {&ms[0], &ms[1]}) {
    const long d = m->G.model().degree;
    o.absorb(m->name, verify_pg_chi(m->G, -2 * d, 2 * d, 2 * d));
  }
  const auto& P4 = ms[0].G;
  o.require(kawasaki_chi_pg(P4, KClass::line(Space::PG, 0), KClass::line(Space::PG, 1)) == 5, "chi(O, O(1)) on P4");
  o.require(kawasaki_chi_pg(P4, KClass::line(Space::PG, 0), KClass::line(Space::PG, 0)) == 1, "chi(O, O) on P4");
  return o;
}

std::vector<std::pair<KClass, KClass>> line_pairs(const SymmetryGroup& G, Space s) {
  std::vector<std::pair<KClass, KClass>> pairs;
  const long d = G.model().degree;
  for (int z = 0; z < static_cast<int>(G.num_characters()); ++z)
    for (long a = 0; a < d; ++a)
      for (long b = -1; b <= 2; ++b) pairs.push_back({KClass::line(s, a, z), KClass::line(s, b)});
  return pairs;
}

Outcome gamma_pairing(const std::vector<Model>& ms) {
  Outcome o;
  const PrecComplex z(1);
  const Real tol = tolerance(20);
  for (const auto& m : ms)
    o.absorb(std::string(m.name) + " PG", verify_gamma_pairing(m.G, line_pairs(m.G, Space::PG), z, kDigits, tol));
  o.absorb("M1 MF", verify_gamma_pairing(ms[0].G, line_pairs(ms[0].G, Space::MF), z, kDigits, tol));
  return o;
}

Outcome lgcy_sign(const std::vector<Model>& ms) {
  Outcome o;
  for (const auto* m : {&ms[0], &ms[2]})
    for (long l : {0L, 1L})
      o.absorb(std::string(m->name) + " l=" + std::to_string(l),
               verify_lgcy_pairing(m->G, l, PrecComplex(1), kDigits, tolerance(20)));
  return o;
}

Outcome ifunction_structure(const std::vector<Model>& ms) {
  Outcome o;
  constexpr int order = 6;
  for (const auto& m : ms) {
    const auto minus = i_minus_series(m.G, order, 4);
    const auto plus = i_plus_series(m.G, order, 4);
    o.absorb(std::string(m.name) + " leading", verify_i_minus_leading(m.G, minus));
    o.absorb(std::string(m.name) + " minus", verify_degree_homogeneity(m.G, minus));
    o.absorb(std::string(m.name) + " plus", verify_degree_homogeneity(m.G, plus));
    o.absorb(std::string(m.name) + " gamma", verify_gamma_ratios(m.G, order, kDigits, tolerance(45)));
  }
  return o;
}

Outcome selection_rules(const std::vector<Model>& ms) {
  Outcome o;
  const auto& G = ms[0].G;
  const int j = G.j(), j2 = G.pow(j, 2), j3 = G.pow(j, 3);
  const auto a = fjrw_bundle_degrees(G, 0, {j2, j2, j2});
  for (const auto& x : a.degrees) o.require(x == -1, "(j2,j2,j2) degree");
  o.require(a.nonempty && a.concave, "(j2,j2,j2) concave");
  const auto b = fjrw_bundle_degrees(G, 0, {j, j, j3});
  for (const auto& x : b.degrees) o.require(x == make_rational(-4, 5), "(j,j,j3) degree");
  o.require(!b.nonempty, "(j,j,j3) empty");
  return o;
}

Outcome lattice_spanning(const std::vector<Model>& ms) {
  Outcome o;
  for (const auto& m : ms) {
    const auto& G = m.G;
    const long d = G.model().degree;
    const long sum_c = G.model().sum_weights();
    std::vector<KClass> ym, pg;
    for (int z = 0; z < static_cast<int>(G.num_characters()); ++z) {
      for (long k = 0; k < d; ++k) ym.push_back(KClass::line(Space::YMinus, k, z));
      for (long k = 0; k < sum_c; ++k) pg.push_back(KClass::line(Space::PG, k, z));
    }
    o.require(lattice_rank(G, ym) == G.narrow_elements().size(), std::string(m.name) + " YMinus rank");
    o.require(lattice_rank(G, pg) == basis(G, Space::PG).size(), std::string(m.name) + " PG rank");
  }
  return o;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Model> ms = baseline();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"quintic window values", [&] { return window_values(ms); }},
      {"induced map commutes with Chern characters", [&] { return per_model_window(ms, verify_induced); }},
      {"Delta- Chern square", [&] { return delta_square(ms); }},
      {"quantum Serre Chern square", [&] { return qsd_square(ms); }},
      {"K-theoretic square", [&] { return per_model_window(ms, verify_ksquare); }},
      {"chi preservation under vgit", [&] { return per_model_window(ms, verify_chi_preservation); }},
      {"pairing normalization against chi", [&] { return pairing_normalization(ms); }},
      {"Gamma-pairing identity", [&] { return gamma_pairing(ms); }},
      {"narrow preservation of U-bar", [&] { return per_model_window(ms, verify_u_bar_narrow); }},
      {"LG/CY pairing sign", [&] { return lgcy_sign(ms); }},
      {"I-function structure", [&] { return ifunction_structure(ms); }},
      {"FJRW selection rules", [&] { return selection_rules(ms); }},
      {"lattice spanning", [&] { return lattice_spanning(ms); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto s = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
    if (!o.passed) ++failed;
    std::printf("%s %2zu %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              total);
  return failed == 0 ? 0 : 1;
}
