#include "report_json.hpp"

#include "lgcy/chern.hpp"
#include "model_file.hpp"

namespace lgcy::tool {

ordered_json model_header(const SymmetryGroup& G, const std::string& name) {
  return {{"name", name},
          {"weights", G.model().weights},
          {"degree", G.model().degree},
          {"group_order", G.size()},
          {"fingerprint", fingerprint(G)}};
}

ordered_json model_info(const SymmetryGroup& G) {
  const LGModel& M = G.model();
  const auto pred = G.predicates();
  ordered_json elems = ordered_json::array();
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int g = static_cast<int>(i);
    elems.push_back({{"element", element_to_string(G.element(g))},
                     {"age", G.age(g).get_str()},
                     {"narrow", G.narrow(g)},
                     {"fixed_rank", G.fixed_rank(g)}});
  }
  ordered_json charges;
  ordered_json dims;
  for (Space s : {Space::YMinus, Space::YPlus, Space::PG, Space::ZAmbient, Space::FJRW}) {
    charges[space_name(s)] = central_charge(G, s).get_str();
    dims[space_name(s)] = basis(G, s).size();
  }
  ordered_json q = ordered_json::array();
  for (int j = 0; j < M.n_vars(); ++j) q.push_back(M.q(j).get_str());
  return {{"weights", M.weights},
          {"degree", M.degree},
          {"q", q},
          {"sum_q", M.sum_q().get_str()},
          {"group_order", G.size()},
          {"gbar_order", G.gbar().size()},
          {"narrow_count", G.narrow_elements().size()},
          {"predicates", {{"quasi_cy", pred.quasi_cy}, {"in_sl", pred.in_sl}, {"convex_od", pred.convex_od}}},
          {"central_charge", charges},
          {"state_space_dim", dims},
          {"convergence_constant", convergence_constant(M).get_str()},
          {"elements", elems}};
}

ordered_json state_space_json(const SymmetryGroup& G, Space s) {
  ordered_json out;
  out["space"] = space_name(s);
  ordered_json b = ordered_json::array();
  for (const auto& e : basis(G, s))
    b.push_back({{"sector", element_to_string(G.element(e.g))}, {"h_power", e.h_power}, {"degree", e.degree.get_str()}});
  out["basis"] = b;
  std::vector<SectorBasisElt> nb;
  if (s == Space::YMinus || s == Space::FJRW || s == Space::YPlus) {
    nb = narrow_basis(G, s);
  } else if (s == Space::PG || s == Space::ZAmbient) {
    nb = basis(G, s);
  } else {
    return out;
  }
  auto vec = [&](const SectorBasisElt& e) {
    CRVector<CycNum> v{s, {}};
    v.add(e.g, NilPoly<CycNum>::monomial(sector_cap(G, s, e.g), e.h_power, CycNum(1)));
    return v;
  };
  ordered_json gram = ordered_json::array();
  for (const auto& a : nb) {
    ordered_json row = ordered_json::array();
    for (const auto& c : nb) row.push_back(pair(G, vec(a), vec(c)).to_string());
    gram.push_back(row);
  }
  out["pairing_basis_size"] = nb.size();
  out["pairing"] = gram;
  return out;
}

ordered_json crvector_json(const SymmetryGroup& G, const CRVector<CycNum>& v) {
  ordered_json out = ordered_json::object();
  for (const auto& [g, p] : v.comp) {
    ordered_json c = ordered_json::array();
    for (int k = 0; k < p.cap(); ++k) c.push_back(p[k].to_string());
    out[element_to_string(G.element(g))] = c;
  }
  return out;
}

ordered_json check_json(const CheckResult& r, bool deterministic) {
  ordered_json o;
  o["name"] = r.report.name;
  o["status"] = r.report.passed ? "pass" : "fail";
  o["cases"] = r.report.cases;
  o["witnesses"] = r.report.witnesses;
  if (!r.report.max_deviation.empty()) o["max_deviation"] = r.report.max_deviation;
  if (!r.report.notes.empty()) o["notes"] = r.report.notes;
  if (!deterministic) o["seconds"] = r.seconds;
  return o;
}

ordered_json series_json(const SymmetryGroup& G, const IFunctionSeries& s) {
  ordered_json out;
  out["side"] = s.side == Side::Minus ? "minus" : "plus";
  out["order"] = s.order;
  out["prefactor"] = s.prefactor;
  ordered_json terms = ordered_json::array();
  for (const auto& [i, t] : s.terms) {
    if (t.coeff.is_zero()) continue;
    ordered_json idx;
    idx["k0"] = i.k0;
    ordered_json kv = ordered_json::object();
    for (const auto& [g, k] : i.kvec) kv[element_to_string(G.element(g))] = k;
    idx["k"] = kv;
    ordered_json coeff = ordered_json::object();
    for (const auto& [b, lp] : t.coeff.terms()) {
      ordered_json lam = ordered_json::object();
      for (const auto& [a, p] : lp.terms()) {
        ordered_json h = ordered_json::array();
        for (int c = 0; c < p.cap(); ++c) h.push_back(p[c].get_str());
        lam["L^" + std::to_string(a)] = h;
      }
      coeff["z^" + std::to_string(b)] = lam;
    }
    terms.push_back({{"index", idx}, {"sector", element_to_string(G.element(t.sector))}, {"coefficient", coeff}});
  }
  out["terms"] = terms;
  ordered_json flags = ordered_json::array();
  for (const auto& i : s.exponent_flags) flags.push_back(series_index_to_string(G, i));
  out["exponent_flags"] = flags;
  return out;
}

Space parse_space(const std::string& s) {
  for (Space x : {Space::YMinus, Space::YPlus, Space::PG, Space::ZAmbient, Space::FJRW, Space::BG, Space::MF})
    if (space_name(x) == s) return x;
  throw ParseError("unknown space '" + s + "' (YMinus, YPlus, PG, ZAmbient, FJRW, BG, MF)");
}

}  // namespace lgcy::tool
