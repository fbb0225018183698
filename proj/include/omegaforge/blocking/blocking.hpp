#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "omegaforge/exact/rational.hpp"
#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

using Triple = std::array<int, 3>;
using SupportSet = std::set<Triple>;

struct BlockGroup {
  int label = 0;
  std::vector<int> indices;
  std::vector<int> tag;  // optional integer vector tag
};

/// Ordered partition of each factor's index range into labelled groups.
struct Blocking {
  std::array<std::vector<BlockGroup>, 3> factors;

  /// Throws ShapeMismatch unless every factor is partitioned exactly.
  void validate(const Index3& dims) const;
  const BlockGroup& group(int factor, int label) const;
  /// Label of each index, per factor.
  std::array<std::vector<int>, 3> label_map(const Index3& dims) const;
};

/// Blocking with every index in its own group, labelled by the index.
Blocking singleton_blocking(const Index3& dims);

SupportSet support(const Tensor& t, const Blocking& d);
Tensor block_component(const Tensor& t, const Blocking& d, const Triple& triple);

/// Sorted labels of factor f occurring in Φ.
std::vector<int> labels_of(const SupportSet& phi, int factor);

/// Rows: (factor, label) pairs in factor-then-label order; columns: the
/// triples of Φ in sorted order.
Matrix<Rational> marginal_matrix(const SupportSet& phi);

struct TightWitness {
  int r = 1;
  int bound = 0;
  std::array<std::map<int, std::vector<long>>, 3> maps;  // label -> Z^r
};

bool validate_tight_witness(const SupportSet& phi, const TightWitness& w);
/// r = 1 search with values in [−bound, bound] and forced-value propagation.
std::optional<TightWitness> is_tight(const SupportSet& phi, int search_bound);
/// Exact genericity test: some integer r = 1 witness exists, with no bound.
std::optional<TightWitness> tight_unbounded(const SupportSet& phi);

using RationalDistribution = std::map<Triple, Rational>;

struct ReconstructibilityResult {
  bool reconstructible = true;
  std::optional<std::pair<RationalDistribution, RationalDistribution>> counterexample;
};

ReconstructibilityResult is_reconstructible(const SupportSet& phi);

/// Integer α, β, γ with α+β+γ = 0 on Ψ and ≥ 1 on Φ∖Ψ.
struct DegenerationWitness {
  std::array<std::map<int, BigInt>, 3> fns;
};

bool validate_degeneration(const SupportSet& psi, const SupportSet& phi, const DegenerationWitness& w);
std::optional<DegenerationWitness> is_combinatorial_degeneration(const SupportSet& psi, const SupportSet& phi);

bool is_diagonal(const SupportSet& delta);
bool is_balanced(const SupportSet& delta, const std::vector<int>& i_labels, const std::vector<int>& j_labels,
                 const std::vector<int>& k_labels);

/// Largest diagonal Δ ⊆ Φ that is a combinatorial degeneration of Φ, ties
/// broken towards the lexicographically smallest Δ.
SupportSet max_degeneration_diagonal(const SupportSet& phi, std::size_t size_budget = 10000);

/// |(1/N)·log multinomial(N; Q) − H(Q/N)|
double multinomial_entropy_gap(const std::vector<long>& q, long n);

nlohmann::json blocking_to_json(const Blocking& d);
Blocking blocking_from_json(const nlohmann::json& j);
nlohmann::json support_to_json(const SupportSet& s);
SupportSet support_from_json(const nlohmann::json& j);

}  // namespace omegaforge
