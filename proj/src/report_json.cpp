#include "picmod/report_json.hpp"

namespace picmod {

namespace {

json exponent_or_unknown(const std::optional<long long>& v) {
  if (v) return *v;
  return "unknown";
}

}  // namespace

json to_json(const PicardReport& rep) {
  json j;
  j["group"] = rep.spec.name();
  j["degree"] = rep.degree.to_string();
  j["genus"] = rep.genus;
  json comps = json::array();
  for (const auto& c : rep.components) comps.push_back(c.to_string());
  j["components"] = comps;
  j["stack"] = {
      {"torsion_invariants", rep.stack.torsion_invariants},
      {"det_generator_exponent", exponent_or_unknown(rep.stack.det_generator_exponent)},
      {"notes", rep.stack.notes},
  };
  j["coarse"] = {
      {"structure", structure_name(rep.coarse.structure)},
      {"theta_unit_exponent", exponent_or_unknown(rep.coarse.theta_unit_exponent)},
      {"det_unit_exponent", exponent_or_unknown(rep.coarse.det_unit_exponent)},
      {"notes", rep.coarse.notes},
  };
  j["caveats"] = rep.caveats;
  return j;
}

json to_json(const oracles::DescentDichotomyReport& rep) {
  return json{{"triples_checked", rep.triples_checked},
              {"cocycles_checked", rep.cocycles_checked},
              {"failures", rep.failures},
              {"ok", rep.ok()}};
}

json to_json(const oracles::GcdGeneratorReport& rep) {
  return json{{"group", rep.group},
              {"witness_names", rep.witness_names},
              {"witness_indices", rep.witness_indices},
              {"d_sigma", rep.d_sigma},
              {"gcd_over_d_sigma", rep.gcd_over_d_sigma},
              {"table_det_unit", rep.table_det_unit},
              {"match", rep.match}};
}

json to_json(const oracles::RhoPSumReport& rep) {
  return json{{"r", rep.r},
              {"s", rep.s},
              {"indices", rep.indices},
              {"weighted_sum", rep.weighted_sum},
              {"gcd_with_adjoint", rep.gcd_with_adjoint},
              {"divisibility_bound", rep.divisibility_bound},
              {"gcd_divides_bound", rep.gcd_divides_bound}};
}

json to_json(const oracles::G2ParityGridReport& rep) {
  return json{{"refinements", rep.refinements},
              {"embeddings", rep.embeddings},
              {"equivalence_checks", rep.equivalence_checks},
              {"failures", rep.failures},
              {"ok", rep.ok()}};
}

json to_json(const oracles::F4BranchingReport& rep) {
  return json{{"restriction_index", rep.restriction_index},
              {"spin8_std_index", rep.spin8_std_index},
              {"ratio", rep.ratio},
              {"ratio_odd", rep.ratio_odd},
              {"det_not_divisible_by_2", rep.det_not_divisible_by_2}};
}

std::string dump_canonical(const json& j) { return j.dump(); }

}  // namespace picmod
