#pragma once

#include <json.hpp>

#include "omegaforge/exact/field.hpp"
#include "omegaforge/exact/laurent.hpp"

namespace omegaforge {

/// {"exponent": "(r,c,s,cs)", ...}
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

FieldElem field_from_json(const nlohmann::json& j);

}  // namespace omegaforge
