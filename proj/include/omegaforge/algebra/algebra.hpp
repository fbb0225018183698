#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

/// Commutative algebra given by structure constants: structure[(i,j,k)] is
/// the coefficient of basis element k in e_i·e_j.
struct Algebra {
  int dim = 0;
  int unit = 0;
  std::vector<std::string> labels;
  Tensor structure;
};

/// Exponent vector of x^a; basis of the apolar algebra is every b ≤ a.
using Monomial = std::vector<int>;

/// First two factors dual, third primal.
Tensor multiplication_tensor(const Algebra& a);

/// a_i·a_i = a_{n+1}, a_i·a_j = 0 otherwise; unit a_0.
Algebra cw_algebra(int n);
/// a_i·a_{n+1−i} = a_{n+1}; unit a_0.
Algebra cw_algebra_paired(int n);
Algebra smoothable_algebra(int m);
Algebra monomial_apolar_algebra(const Monomial& f, const std::vector<std::string>& variables = {});
Algebra tensor_product(const Algebra& a, const Algebra& b);

std::vector<FieldElem> multiply(const Algebra& a, const std::vector<FieldElem>& u, const std::vector<FieldElem>& v);
bool is_commutative(const Algebra& a);
bool is_associative(const Algebra& a);
bool unit_is_identity(const Algebra& a);

/// Dimensions of m^i/m^{i+1}. Throws NotLocalBasis.
std::vector<int> hilbert_function(const Algebra& a);

nlohmann::json algebra_to_json(const Algebra& a);

}  // namespace omegaforge
