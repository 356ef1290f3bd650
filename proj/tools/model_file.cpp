#include "model_file.hpp"

#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

namespace lgcy::tool {

namespace {

[[noreturn]] void fail_at(const std::string& origin, const YAML::Mark& mark, const std::string& msg) {
  std::ostringstream os;
  os << origin;
  if (!mark.is_null()) os << ":" << mark.line + 1 << ":" << mark.column + 1;
  os << ": " << msg;
  throw ParseError(os.str());
}

int as_int(const YAML::Node& n, const std::string& origin, const std::string& what) {
  if (!n.IsScalar()) fail_at(origin, n.Mark(), what + " must be an integer");
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    fail_at(origin, n.Mark(), what + " must be an integer, got '" + n.Scalar() + "'");
  }
}

std::vector<int> int_list(const YAML::Node& n, const std::string& origin, const std::string& what) {
  if (!n.IsSequence()) fail_at(origin, n.Mark(), what + " must be a list of integers");
  std::vector<int> out;
  for (const auto& x : n) out.push_back(as_int(x, origin, what + " entry"));
  return out;
}

}  // namespace

ModelFile parse_model_yaml(const std::string& text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    fail_at(origin, e.mark, e.msg);
  }
  if (!root.IsMap()) fail_at(origin, root.Mark(), "model file must be a mapping");

  static const std::vector<std::string> known{"name", "weights", "degree", "group", "options"};
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(known.begin(), known.end(), key) == known.end())
      fail_at(origin, kv.first.Mark(), "unknown key '" + key + "'");
  }

  ModelFile m;
  m.name = root["name"] ? root["name"].as<std::string>() : std::string("unnamed");
  if (!root["weights"]) fail_at(origin, root.Mark(), "missing 'weights'");
  if (!root["degree"]) fail_at(origin, root.Mark(), "missing 'degree'");
  m.weights = int_list(root["weights"], origin, "weights");
  m.degree = as_int(root["degree"], origin, "degree");

  if (const YAML::Node g = root["group"]) {
    if (!g.IsMap()) fail_at(origin, g.Mark(), "'group' must be a mapping");
    if (const YAML::Node gens = g["generators"]) {
      if (!gens.IsSequence()) fail_at(origin, gens.Mark(), "'group.generators' must be a list");
      for (const auto& gen : gens) {
        std::vector<int> a = int_list(gen, origin, "generator");
        if (a.size() != m.weights.size())
          fail_at(origin, gen.Mark(),
                  "generator has " + std::to_string(a.size()) + " entries, expected " + std::to_string(m.weights.size()));
        m.generators.push_back(GroupElement{a});
      }
    }
  }

  if (const YAML::Node o = root["options"]) {
    if (!o.IsMap()) fail_at(origin, o.Mark(), "'options' must be a mapping");
    if (o["order"]) m.options.order = as_int(o["order"], origin, "options.order");
    if (o["precision"]) m.options.precision = as_int(o["precision"], origin, "options.precision");
    if (const YAML::Node r = o["l_range"]) {
      std::vector<int> v = int_list(r, origin, "options.l_range");
      if (v.size() != 2 || v[0] > v[1]) fail_at(origin, r.Mark(), "options.l_range must be [a, b] with a <= b");
      m.options.l_range = std::make_pair(long(v[0]), long(v[1]));
    }
  }
  return m;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open model file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_yaml(ss.str(), path);
}

SymmetryGroup build_group(const ModelFile& m, const std::string& origin) {
  try {
    return SymmetryGroup::closure(LGModel(m.weights, m.degree), m.generators);
  } catch (const ModelError& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

std::string canonical_form(const SymmetryGroup& G) {
  std::ostringstream os;
  os << "lgcy-model/1;weights=";
  for (std::size_t j = 0; j < G.model().weights.size(); ++j) os << (j ? "," : "") << G.model().weights[j];
  os << ";degree=" << G.model().degree << ";elements=";
  // elements() is sorted, so this is independent of the generating set.
  for (const auto& g : G.elements()) os << element_to_string(g);
  return os.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, md, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("SHA-256 failed");
  }
  EVP_MD_CTX_free(ctx);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string fingerprint(const SymmetryGroup& G) { return sha256_hex(canonical_form(G)); }

std::pair<long, long> parse_l_range(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*\.\.\s*([+-]?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("--l-range: expected a..b, got '" + s + "'");
  long a = std::stol(m[1]), b = std::stol(m[2]);
  if (a > b) throw ParseError("--l-range: empty range " + s);
  return {a, b};
}

}  // namespace lgcy::tool
