#include "omegaforge/laser/laser_json.hpp"

namespace omegaforge {

using nlohmann::json;

json problem_to_json(const LaserProblem& p) {
  json values = json::array();
  for (const auto& [t, v] : p.values) values.push_back({t, v.alpha, v.beta});
  return {{"support", support_to_json(p.support)},
          {"values", values},
          {"group", to_string(p.group)},
          {"brank_budget", p.brank_budget}};
}

LaserProblem problem_from_json(const json& j) {
  LaserProblem p;
  try {
    p.support = support_from_json(j.at("support"));
    for (const auto& e : j.at("values")) p.values[e.at(0).get<Triple>()] = {e.at(1).get<double>(), e.at(2).get<double>()};
    p.group = parse_group(j.value("group", std::string("cyclic3")));
    p.brank_budget = j.at("brank_budget").get<long>();
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("laser problem JSON: ") + ex.what());
  }
  return p;
}

json distribution_to_json(const Distribution& d) {
  json out = json::array();
  auto snap = d.snapshot();
  for (std::size_t k = 0; k < d.triples.size(); ++k)
    out.push_back({{"triple", d.triples[k]}, {"weight", d.weights[k]}, {"rational", to_string(snap[d.triples[k]])}});
  return out;
}

json report_to_json(const OmegaBoundReport& r) {
  return {{"status", r.status},
          {"omega_star", r.omega_star},
          {"distribution", distribution_to_json(r.p)},
          {"marginal_entropies", r.marginal_entropies},
          {"penalty", r.penalty},
          {"iterations", r.iterations},
          {"residual", r.residual},
          {"budget_log", r.budget_log},
          {"reconstructible", r.reconstructible},
          {"penalty_mode", to_string(r.mode)},
          {"group", to_string(r.group)}};
}

}  // namespace omegaforge
