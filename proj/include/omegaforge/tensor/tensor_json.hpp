#pragma once

#include <json.hpp>

#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

/// {dims, labels?, entries: [[i,j,k,"(r,c,s,cs)"]...]} with entries sorted.
nlohmann::json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const nlohmann::json& j);

/// As tensor_to_json but each coefficient is a Laurent map.
nlohmann::json curve_to_json(const CurveTensor& t);
CurveTensor curve_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix<FieldElem>& m);
Matrix<FieldElem> matrix_from_json(const nlohmann::json& j);

}  // namespace omegaforge
