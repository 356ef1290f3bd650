#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include "lgcy/chern.hpp"
#include "lgcy/ifunction.hpp"
#include "lgcy/kclass.hpp"
#include "lgcy/suite.hpp"
#include "model_file.hpp"
#include "report_json.hpp"

namespace {

using namespace lgcy;
using namespace lgcy::tool;

struct Globals {
  std::string model_path;
  std::string l_range;
  std::optional<int> order;
  std::optional<int> precision;
  int jobs = 1;
  std::string out;
  bool deterministic = false;
};

struct Loaded {
  ModelFile file;
  SymmetryGroup group;
  SuiteOptions opt;
};

int env_precision() {
  const char* s = std::getenv("LGCY_PRECISION");
  if (!s || !*s) return kDefaultDigits;
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != std::string(s).size() || v < 10) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("LGCY_PRECISION: expected an integer >= 10, got '") + s + "'");
  }
}

Loaded load(const Globals& g) {
  if (g.model_path.empty()) throw ParseError("--model is required");
  ModelFile f = load_model_file(g.model_path);
  SymmetryGroup G = build_group(f, g.model_path);
  SuiteOptions opt;
  // flag > model file > LGCY_PRECISION > built-in default
  opt.digits = g.precision ? *g.precision : f.options.precision ? *f.options.precision : env_precision();
  if (opt.digits < 10) throw ParseError("--precision must be at least 10 digits");
  opt.order = g.order ? *g.order : f.options.order.value_or(6);
  if (opt.order < 0) throw ParseError("--order must be nonnegative");
  auto range = !g.l_range.empty() ? parse_l_range(g.l_range) : f.options.l_range.value_or(std::make_pair(-5L, 5L));
  opt.l_min = range.first;
  opt.l_max = range.second;
  opt.jobs = std::max(1, g.jobs);
  return {std::move(f), std::move(G), opt};
}

ordered_json envelope(const Globals& g, const Loaded& m, const std::string& command) {
  ordered_json r;
  r["schema"] = kSchema;
  r["library_version"] = kLibraryVersion;
  r["command"] = command;
  r["model"] = model_header(m.group, m.file.name);
  r["options"] = {{"l_range", {m.opt.l_min, m.opt.l_max}}, {"order", m.opt.order}, {"precision", m.opt.digits}};
  if (!g.deterministic) {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    r["timestamp"] = buf;
  }
  return r;
}

void emit(const Globals& g, const ordered_json& j) {
  const std::string text = j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw ParseError(g.out + ": cannot open for writing");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LG/CY square toolkit for Fermat Landau-Ginzburg pairs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--model", g.model_path, "Model file (YAML)");
  app.add_option("--l-range", g.l_range, "Window range a..b");
  app.add_option("--order", g.order, "Truncation order of I-function series");
  app.add_option("--precision", g.precision, "Working precision in decimal digits");
  app.add_option("--jobs", g.jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the JSON report here instead of stdout");
  app.add_flag("--deterministic", g.deterministic, "Omit timestamps and timings");

  auto* model_cmd = app.add_subcommand("model", "Model inspection")->require_subcommand(1);
  auto* info_cmd = model_cmd->add_subcommand("info", "Group, sectors and structural predicates");

  auto* compute = app.add_subcommand("compute", "Exact computations")->require_subcommand(1);
  std::string space_arg = "YMinus";
  long k_arg = 0, k2_arg = 0, l_arg = 0;
  int zeta_arg = 0;
  std::string side_arg = "minus";
  auto* ss_cmd = compute->add_subcommand("state-space", "Graded basis and pairing");
  ss_cmd->add_option("--space", space_arg, "YMinus, YPlus, PG, ZAmbient or FJRW");
  auto* ch_cmd = compute->add_subcommand("ch", "Orbifold Chern character of a line-bundle class");
  ch_cmd->add_option("--space", space_arg, "BG, YMinus, PG, YPlus, ZAmbient or MF");
  ch_cmd->add_option("--k", k_arg, "Lambda-weight");
  ch_cmd->add_option("--zeta", zeta_arg, "Gbar-character id");
  ch_cmd->add_option("--k2", k2_arg, "R-charge weight (MF)");
  auto* if_cmd = compute->add_subcommand("ifunction", "Truncated I-function series");
  if_cmd->add_option("--side", side_arg, "minus or plus")->check(CLI::IsMember({"minus", "plus"}));
  auto* kc_cmd = compute->add_subcommand("kclass", "Window images of i0_* O_BG(k, zeta)");
  kc_cmd->add_option("--l", l_arg, "Window");
  kc_cmd->add_option("--k", k_arg, "Lambda-weight");
  kc_cmd->add_option("--zeta", zeta_arg, "Gbar-character id");

  auto* check = app.add_subcommand("check", "Verification suites");
  std::vector<std::string> check_args;
  std::vector<std::string> allowed = check_names();
  allowed.push_back("all");
  check->add_option("names", check_args, "Checks to run, or 'all'")->required()->check(CLI::IsMember(allowed));

  for (auto* sub : {model_cmd, info_cmd, compute, ss_cmd, ch_cmd, if_cmd, kc_cmd, check}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Loaded m = load(g);
    const SymmetryGroup& G = m.group;
    if (info_cmd->parsed()) {
      ordered_json r = envelope(g, m, "model info");
      r["result"] = model_info(G);
      emit(g, r);
      return 0;
    }
    if (ss_cmd->parsed()) {
      ordered_json r = envelope(g, m, "compute state-space");
      r["result"] = state_space_json(G, parse_space(space_arg));
      emit(g, r);
      return 0;
    }
    if (ch_cmd->parsed()) {
      if (zeta_arg < 0 || static_cast<std::size_t>(zeta_arg) >= G.num_characters())
        throw ParseError("--zeta out of range: the model has " + std::to_string(G.num_characters()) + " characters");
      Space s = parse_space(space_arg);
      KClass x = KClass::line(s, k_arg, zeta_arg, k2_arg);
      ordered_json r = envelope(g, m, "compute ch");
      r["result"] = {{"class", kclass_to_string(G, x)}, {"ch", crvector_json(G, orb_ch(G, x))}};
      emit(g, r);
      return 0;
    }
    if (if_cmd->parsed()) {
      IFunctionSeries s = side_arg == "minus" ? i_minus_series(G, m.opt.order, m.opt.jobs)
                                              : i_plus_series(G, m.opt.order, m.opt.jobs);
      ordered_json r = envelope(g, m, "compute ifunction");
      r["result"] = series_json(G, s);
      emit(g, r);
      return 0;
    }
    if (kc_cmd->parsed()) {
      if (zeta_arg < 0 || static_cast<std::size_t>(zeta_arg) >= G.num_characters())
        throw ParseError("--zeta out of range: the model has " + std::to_string(G.num_characters()) + " characters");
      const WindowSpec w{l_arg};
      KClass x = KClass::line(Space::YMinus, k_arg, zeta_arg);
      KClass top = restrict_to_z(vgit_l(G, x, w));
      KClass bottom = orlov_l(G, to_mf(x), w);
      ordered_json r = envelope(g, m, "compute kclass");
      r["result"] = {{"input", kclass_to_string(G, x)},
                     {"vgit", kclass_to_string(G, vgit_l(G, x, w))},
                     {"restricted", kclass_to_string(G, top)},
                     {"orlov", kclass_to_string(G, bottom)},
                     {"paths_agree", same_class(G, top, bottom)}};
      emit(g, r);
      return 0;
    }
    if (check->parsed()) {
      std::vector<std::string> names;
      for (const auto& a : check_args) {
        if (a == "all") {
          names = check_names();
          break;
        }
        if (std::find(names.begin(), names.end(), a) == names.end()) names.push_back(a);
      }
      auto results = run_checks(G, names, m.opt);
      ordered_json r = envelope(g, m, "check");
      ordered_json arr = ordered_json::array();
      bool ok = true;
      for (const auto& res : results) {
        arr.push_back(check_json(res, g.deterministic));
        ok = ok && res.report.passed;
      }
      r["checks"] = arr;
      r["status"] = ok ? "pass" : "fail";
      emit(g, r);
      for (const auto& res : results)
        std::cerr << (res.report.passed ? "PASS " : "FAIL ") << res.report.name << " (" << res.report.cases
                  << " cases)\n";
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
