#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "codeglab/classify.hpp"

namespace codeglab {

using ordered_json = nlohmann::ordered_json;

// Stable report schema:
// {group, p, direct_hp, direct_hp_star, ti, cases_a, cases_c, witnesses,
//  gcd_set, timings}.  timings is null unless timing was requested, so
// default outputs are byte-identical across runs and worker counts.
inline ordered_json report_to_json(const ClassificationReport& r) {
  ordered_json j;
  j["group"] = r.group_id;
  j["p"] = r.p;
  j["direct_hp"] = r.direct_hp;
  j["direct_hp_star"] = r.direct_hp_star;
  j["ti"] = r.abelian_ti_sylow;
  j["cases_a"] = r.cases_a;
  j["cases_c"] = r.cases_c;
  ordered_json w;
  auto witness_json = [](const DirectWitness& dw) {
    ordered_json x;
    x["chi"] = dw.chi;
    x["degree"] = dw.degree;
    x["codegree"] = dw.codegree;
    return x;
  };
  w["hp"] = r.hp_witness ? witness_json(*r.hp_witness) : ordered_json(nullptr);
  w["hp_star"] =
      r.hp_star_witness ? witness_json(*r.hp_star_witness) : ordered_json(nullptr);
  ordered_json cases = ordered_json::object();
  for (const auto& [label, kv] : r.case_params) {
    ordered_json c = ordered_json::object();
    for (const auto& [k, v] : kv) c[k] = v;
    cases[label] = c;
  }
  w["cases"] = cases;
  w["group_order"] = r.group_order;
  w["p_residual_order"] = r.n_order;
  j["witnesses"] = w;
  j["gcd_set"] = r.gcds;
  if (r.seconds >= 0) {
    ordered_json t;
    t["seconds"] = r.seconds;
    j["timings"] = t;
  } else {
    j["timings"] = nullptr;
  }
  return j;
}

inline std::string reports_to_json_lines(const std::vector<ClassificationReport>& rs) {
  std::string out;
  for (const auto& r : rs) {
    out += report_to_json(r).dump();
    out += '\n';
  }
  return out;
}

}  // namespace codeglab
