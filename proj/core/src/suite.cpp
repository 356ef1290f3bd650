#include "lgcy/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>

#include "lgcy/chern.hpp"
#include "lgcy/ifunction.hpp"
#include "lgcy/transforms.hpp"

namespace lgcy {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"induced", "delta", "qsd", "ksquare",
                                              "gamma-pairing", "chi", "lgcy", "ifunction"};
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Real numeric_tolerance(int digits) { return Real::pow10(-std::max(10, digits - 30), digits_to_bits(digits)); }

namespace {

CheckReport named(CheckReport r, const std::string& name) {
  r.name = name;
  return r;
}

CheckReport gamma_pairing_suite(const SymmetryGroup& G, const SuiteOptions& opt) {
  const long d = G.model().degree;
  const Real tol = numeric_tolerance(opt.digits);
  const PrecComplex z = PrecComplex::from_rational(1, opt.digits);
  CheckReport all{"gamma-pairing", true, 0, {}, "", {}};
  for (Space s : {Space::PG, Space::YMinus, Space::YPlus, Space::MF}) {
    std::vector<std::pair<KClass, KClass>> pairs;
    for (long a = 0; a < d; ++a)
      for (std::size_t z0 = 0; z0 < G.num_characters(); ++z0)
        for (long b = -1; b <= 2; ++b)
          pairs.push_back({KClass::line(s, a, static_cast<int>(z0)), KClass::line(s, b)});
    CheckReport r = verify_gamma_pairing(G, pairs, z, opt.digits, tol);
    for (auto& w : r.witnesses) w = space_name(s) + ": " + w;
    all.merge(r);
  }
  return all;
}

CheckReport ifunction_suite(const SymmetryGroup& G, const SuiteOptions& opt) {
  CheckReport all{"ifunction", true, 0, {}, "", {}};
  IFunctionSeries minus = i_minus_series(G, opt.order);
  IFunctionSeries plus = i_plus_series(G, opt.order);
  all.merge(verify_i_minus_leading(G, minus));
  all.merge(verify_degree_homogeneity(G, minus));
  all.merge(verify_degree_homogeneity(G, plus));
  all.merge(verify_gamma_ratios(G, opt.order, opt.digits, Real::pow10(-(opt.digits - 5), digits_to_bits(opt.digits))));
  all.notes.push_back(std::to_string(plus.exponent_flags.size()) +
                      " plus-side indices where the literal z-exponent reading differs");
  return all;
}

}  // namespace

CheckReport run_check(const SymmetryGroup& G, const std::string& name, const SuiteOptions& opt) {
  if (opt.l_min > opt.l_max) throw MathError("empty window range");
  CheckReport all{name, true, 0, {}, "", {}};
  const long d = G.model().degree;
  if (name == "induced") {
    for (long l = opt.l_min; l <= opt.l_max; ++l) {
      all.merge(verify_induced(G, l));
      all.merge(verify_u_bar_narrow(G, l));
    }
  } else if (name == "delta") {
    all.merge(verify_delta_square(G));
  } else if (name == "qsd") {
    all.merge(verify_qsd_square(G, -d, 2 * d));
  } else if (name == "ksquare") {
    for (long l = opt.l_min; l <= opt.l_max; ++l) all.merge(verify_ksquare(G, l));
  } else if (name == "gamma-pairing") {
    all.merge(gamma_pairing_suite(G, opt));
  } else if (name == "chi") {
    for (long l = opt.l_min; l <= opt.l_max; ++l) all.merge(verify_chi_preservation(G, l));
    all.merge(verify_pg_chi(G, 0, d, 2 * d));
  } else if (name == "lgcy") {
    const PrecComplex z = PrecComplex::from_rational(1, opt.digits);
    for (long l = opt.l_min; l <= opt.l_max; ++l)
      all.merge(verify_lgcy_pairing(G, l, z, opt.digits, numeric_tolerance(opt.digits)));
  } else if (name == "ifunction") {
    all.merge(ifunction_suite(G, opt));
  } else {
    throw MathError("unknown check: " + name);
  }
  return named(all, name);
}

std::vector<CheckResult> run_checks(const SymmetryGroup& G, const std::vector<std::string>& names,
                                    const SuiteOptions& opt) {
  std::vector<CheckResult> out(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < names.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      out[i].report = run_check(G, names[i], opt);
      out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(opt.jobs, static_cast<int>(names.size())));
  std::vector<std::future<void>> fut;
  for (int t = 1; t < n; ++t) fut.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : fut) f.get();
  return out;
}

}  // namespace lgcy
