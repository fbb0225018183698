#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegaforge/blocking/blocking.hpp"
#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

/// log V_ω ≥ alpha + beta·ω for a symmetrized block.
struct ValueBound {
  double alpha = 0;
  double beta = 0;
  double at(double omega) const { return alpha + beta * omega; }
};

inline ValueBound operator+(ValueBound a, ValueBound b) { return {a.alpha + b.alpha, a.beta + b.beta}; }

enum class PenaltyMode { MaxentRestricted, Off };
std::string to_string(PenaltyMode m);
PenaltyMode parse_penalty_mode(const std::string& name);

struct LaserProblem {
  SupportSet support;
  std::map<Triple, ValueBound> values;
  Group group = Group::Cyclic3;
  long brank_budget = 1;
};

using Marginals = std::array<std::map<int, double>, 3>;

/// Weights over the sorted triples of a support.
struct Distribution {
  std::vector<Triple> triples;
  std::vector<double> weights;

  static Distribution uniform(const SupportSet& s);
  static Distribution from_map(const std::map<Triple, double>& w);
  double at(const Triple& t) const;
  Marginals marginals() const;
  /// Weights rounded to denominator 10^12.
  RationalDistribution snapshot() const;
};

/// Natural-log entropy; throws NotADistribution on negative weights or a
/// total differing from 1 by more than 1e-9.
double entropy(const std::vector<double>& weights);
double entropy(const std::map<int, double>& weights);

/// Max-entropy distribution on Φ with the given marginals by iterative
/// proportional fitting. Throws Infeasible when fitting does not converge.
Distribution max_entropy_with_marginals(const SupportSet& phi, const Marginals& marginals);

/// H(maxent(marginals(P))) − H(P).
double gamma_penalty(const SupportSet& phi, const Distribution& p);

/// min_L Σ_{σ∈G} H(P_{σ(L)})
double symmetrized_entropy(const LaserProblem& prob, const Distribution& p);

double laser_rhs(const LaserProblem& prob, const Distribution& p, double omega,
                 PenaltyMode mode = PenaltyMode::MaxentRestricted);

struct OptimizeOptions {
  int starts = 16;
  PenaltyMode mode = PenaltyMode::MaxentRestricted;
  bool parallel = true;
};

struct OptimizeResult {
  Distribution p;
  double value = 0;
  long iterations = 0;
  int best_start = 0;
};

/// Maximizes laser_rhs over the simplex (or over the max-entropy-consistent
/// submanifold for non-reconstructible supports in restricted mode).
OptimizeResult optimize_distribution(const LaserProblem& prob, double omega, const OptimizeOptions& opts = {});
/// Same computation with the multi-starts run one after another.
OptimizeResult optimize_distribution_serial(const LaserProblem& prob, double omega, OptimizeOptions opts = {});

struct SolveOptions {
  double omega_tol = 1e-6;
  OptimizeOptions optimize;
};

struct OmegaBoundReport {
  std::string status = "ok";  // ok, no_root, clamped_at_2
  double omega_star = 3;
  Distribution p;
  std::array<double, 3> marginal_entropies{};
  double penalty = 0;
  long iterations = 0;
  double residual = 0;
  double budget_log = 0;
  bool reconstructible = true;
  PenaltyMode mode = PenaltyMode::MaxentRestricted;
  Group group = Group::Cyclic3;
};

/// Bisection for ω* ∈ [2,3] with max_P laser_rhs(ω*) = |G|·log(brank_budget).
/// Throws Unbounded if every beta is zero.
OmegaBoundReport solve_omega(const LaserProblem& prob, const SolveOptions& opts = {});

struct MatmultTerm {
  int a = 1, b = 1, c = 1;
  long multiplicity = 1;
};

/// Root ω ∈ [2,3] of Σ mult·(abc)^{ω/3} = R. Throws NoRoot.
double schonhage_solve(const std::vector<MatmultTerm>& terms, long r, double tol = 1e-9);

/// Value of the G-symmetrized M⟨a,b,c⟩: beta = |G|/3·log(abc).
ValueBound matmult_value(int a, int b, int c, Group g);

/// (a,b,c) with T ≅ M⟨a,b,c⟩ after dropping zero slices.
std::optional<std::array<int, 3>> recognize_matmult(const Tensor& t);

struct NestedOptions {
  int tight_search_bound = 8;
  OptimizeOptions optimize;
  bool parallel = true;
};

/// Affine lower bound for the value of a block from an inner laser run.
/// Throws NotTight or MissingValueBound.
ValueBound nested_value_bound(const Tensor& block, const Blocking& inner, Group g, const NestedOptions& opts = {});
ValueBound nested_value_bound_serial(const Tensor& block, const Blocking& inner, Group g, NestedOptions opts = {});

}  // namespace omegaforge
