#pragma once

#include <json.hpp>
#include <string>

#include "lgcy/ifunction.hpp"
#include "lgcy/kclass.hpp"
#include "lgcy/statespace.hpp"
#include "lgcy/suite.hpp"

namespace lgcy::tool {

using nlohmann::ordered_json;

inline constexpr const char* kSchema = "lgcy-report/1";
inline constexpr const char* kLibraryVersion = "0.1.0";

ordered_json model_header(const SymmetryGroup& G, const std::string& name);
ordered_json model_info(const SymmetryGroup& G);
ordered_json state_space_json(const SymmetryGroup& G, Space s);
ordered_json crvector_json(const SymmetryGroup& G, const CRVector<CycNum>& v);
ordered_json check_json(const CheckResult& r, bool deterministic);
ordered_json series_json(const SymmetryGroup& G, const IFunctionSeries& s);

Space parse_space(const std::string& s);

}  // namespace lgcy::tool
