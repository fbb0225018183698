#pragma once

#include <json.hpp>

#include "omegaforge/laser/laser.hpp"

namespace omegaforge {

/// {support, values: [[triple, alpha, beta]...], group, brank_budget}
nlohmann::json problem_to_json(const LaserProblem& p);
LaserProblem problem_from_json(const nlohmann::json& j);

nlohmann::json distribution_to_json(const Distribution& d);
nlohmann::json report_to_json(const OmegaBoundReport& r);

}  // namespace omegaforge
