#pragma once

#include <nlohmann/json.hpp>

#include "picmod/oracles.hpp"
#include "picmod/picard_tables.hpp"

namespace picmod {

// Canonical JSON: alphabetically ordered keys (nlohmann default), compact
// dump, integers and strings only.  Exponents the tables do not determine
// are the explicit string "unknown".
using json = nlohmann::json;

json to_json(const PicardReport& rep);
json to_json(const oracles::DescentDichotomyReport& rep);
json to_json(const oracles::GcdGeneratorReport& rep);
json to_json(const oracles::RhoPSumReport& rep);
json to_json(const oracles::G2ParityGridReport& rep);
json to_json(const oracles::F4BranchingReport& rep);

std::string dump_canonical(const json& j);

}  // namespace picmod
