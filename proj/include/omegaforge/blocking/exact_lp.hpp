#pragma once

#include <optional>
#include <vector>

#include "omegaforge/exact/linalg.hpp"
#include "omegaforge/exact/rational.hpp"

namespace omegaforge {

/// Exact feasibility of {x free : A_eq·x = b_eq, A_ge·x ≥ b_ge} by the
/// two-phase simplex method with Bland's rule. Returns a feasible point.
std::optional<std::vector<Rational>> exact_feasible(const Matrix<Rational>& a_eq, const std::vector<Rational>& b_eq,
                                                    const Matrix<Rational>& a_ge, const std::vector<Rational>& b_ge,
                                                    std::size_t nvars);

}  // namespace omegaforge
