#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "omegaforge/blocking/blocking.hpp"
#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

struct NamedTensorSpec {
  std::string family;
  std::map<std::string, int> params;
  Tensor tensor;
  Blocking blocking;
  long budget = 0;
  std::string budget_provenance;
};

NamedTensorSpec strassen(int n);
NamedTensorSpec cw_small(int m);
NamedTensorSpec cw_big(int m);
NamedTensorSpec hw_tensor(int m);
Blocking hw_default_blocking(int m);
NamedTensorSpec smoothable_tensor(int m);
NamedTensorSpec a3_tensor();
NamedTensorSpec matmult_spec(int a, int b, int c);

/// Dispatch by CLI family name (strassen, cw-small, cw-big, hw, smoothable,
/// a3, matmult). Throws BadParams.
NamedTensorSpec construct(const std::string& family, const std::map<std::string, int>& params);

nlohmann::json spec_to_json(const NamedTensorSpec& s);
NamedTensorSpec spec_from_json(const nlohmann::json& j);

using LinearForm = std::vector<FieldElem>;

/// xyz := (1/6)·Σ over the six orderings of x⊗y⊗z.
Tensor symmetric_product(const LinearForm& x, const LinearForm& y, const LinearForm& z);

/// Source label → linear form in the target variables.
struct Substitution {
  int target_dim = 0;
  std::map<std::string, LinearForm> images;
};

/// Expands the substitution on a labelled symmetric source tensor. Throws
/// UnboundVariable if an occurring source variable has no image.
Tensor substitute(const Tensor& source, const Substitution& sub);
bool verify_substitution(const Tensor& source, const Substitution& sub, const Tensor& target);

struct HwvIdentity {
  std::string name;
  Tensor source;  // symmetric cubic in the E_{i,j}, labelled "E_{i,j}"
  Substitution sub;
  NamedTensorSpec target;
};

/// The five highest-weight-vector identities for gl_n (n ≥ 4).
std::vector<HwvIdentity> hwv_identities(int n);

}  // namespace omegaforge
