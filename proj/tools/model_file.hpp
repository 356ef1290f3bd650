#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/model.hpp"

namespace lgcy::tool {

// Malformed model file or command line; carries a "file:line:col: " prefix
// when a location is known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  std::optional<int> order;
  std::optional<int> precision;
  std::optional<std::pair<long, long>> l_range;
};

struct ModelFile {
  std::string name;
  std::vector<int> weights;
  int degree = 0;
  std::vector<GroupElement> generators;
  ModelOptions options;
};

ModelFile parse_model_yaml(const std::string& text, const std::string& origin);
ModelFile load_model_file(const std::string& path);

// Builds the model and group; model errors become ParseError anchored at `origin`.
SymmetryGroup build_group(const ModelFile& m, const std::string& origin);

// Canonical serialization of the group as a set of elements.
std::string canonical_form(const SymmetryGroup& G);
std::string sha256_hex(const std::string& data);
std::string fingerprint(const SymmetryGroup& G);

// "a..b" with optional signs, e.g. "-5..5".
std::pair<long, long> parse_l_range(const std::string& s);

}  // namespace lgcy::tool
