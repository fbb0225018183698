#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegaforge/error.hpp"
#include "omegaforge/exact/field.hpp"
#include "omegaforge/exact/laurent.hpp"
#include "omegaforge/exact/linalg.hpp"

namespace omegaforge {

using Index3 = std::array<int, 3>;
using Labels = std::array<std::vector<std::string>, 3>;

/// Sparse order-3 tensor with sorted coordinate storage. Zero coefficients
/// are never stored.
template <class C>
class BasicTensor {
 public:
  using Entries = std::map<Index3, C>;

  BasicTensor() = default;
  explicit BasicTensor(Index3 dims) : dims_(dims) {
    for (int d : dims)
      if (d < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
  }

  const Index3& dims() const { return dims_; }
  int dim(int factor) const { return dims_[factor]; }
  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::optional<Labels>& labels() const { return labels_; }
  void set_labels(Labels labels) {
    for (int f = 0; f < 3; ++f)
      if (static_cast<int>(labels[f].size()) != dims_[f])
        throw Error(ErrorKind::ShapeMismatch, "label list length differs from dimension");
    labels_ = std::move(labels);
  }
  void clear_labels() { labels_.reset(); }
  /// Label of index i in factor f, or its decimal index when unlabeled.
  std::string label(int f, int i) const { return labels_ ? (*labels_)[f][i] : std::to_string(i); }

  C get(const Index3& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? C() : it->second;
  }

  void set(const Index3& idx, C value) {
    check(idx);
    if (is_zero(value))
      entries_.erase(idx);
    else
      entries_[idx] = std::move(value);
  }

  void add(const Index3& idx, const C& value) {
    check(idx);
    if (is_zero(value)) return;
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (is_zero(it->second)) entries_.erase(it);
    }
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const BasicTensor& a, const BasicTensor& b) { return !(a == b); }

 private:
  void check(const Index3& idx) const {
    for (int f = 0; f < 3; ++f)
      if (idx[f] < 0 || idx[f] >= dims_[f]) throw Error(ErrorKind::ShapeMismatch, "index out of range");
  }

  Index3 dims_{0, 0, 0};
  Entries entries_;
  std::optional<Labels> labels_;
};

using Tensor = BasicTensor<FieldElem>;
using CurveTensor = BasicTensor<LaurentPoly>;

/// One matrix per factor; maps[f] has shape (new dim) × (old dim).
struct FactorMaps {
  std::array<Matrix<FieldElem>, 3> maps;
};

/// Permutation of the three factors, written as the word (perm[0] perm[1] perm[2]).
using FactorPerm = std::array<int, 3>;

enum class Group { Trivial, Cyclic3, S3, Swap01, Swap02, Swap12 };

/// Elements of G sorted by permutation word.
std::vector<FactorPerm> group_elements(Group g);
std::size_t group_order(Group g);
std::string to_string(Group g);
Group parse_group(const std::string& name);

Tensor matmult_tensor(int a, int b, int c);
Tensor unit_tensor();
Tensor kronecker(const Tensor& a, const Tensor& b);
/// σT with new factor p equal to old factor perm[p].
Tensor permute_factors(const Tensor& t, const FactorPerm& perm);
Tensor symmetrize(const Tensor& t, Group g);
Tensor direct_sum(const Tensor& a, const Tensor& b);
Tensor apply_restriction(const Tensor& t, const FactorMaps& maps);
/// Relabels basis indices: new index of i in factor f is perms[f][i].
Tensor permute_indices(const Tensor& t, const std::array<std::vector<int>, 3>& perms);

/// Rank of the flattening onto factor f.
std::size_t flattening_rank(const Tensor& t, int factor);

struct Conciseness {
  std::array<bool, 3> concise{};
  Index3 reduced_dims{};
  bool all() const { return concise[0] && concise[1] && concise[2]; }
};
Conciseness is_concise(const Tensor& t);

/// Slice matrices for each basis vector of `factor`; rows/columns index the
/// remaining two factors in their original order.
std::vector<Matrix<FieldElem>> contraction_space(const Tensor& t, int factor);

/// True iff T is fixed by all six factor permutations.
bool is_symmetric(const Tensor& t);

/// Removes basis indices whose slice is zero, in every factor.
Tensor drop_zero_slices(const Tensor& t);

/// Entrywise lim_{t→0} t^e·CT. Throws NegativeOrder naming the entry.
Tensor curve_limit(const CurveTensor& ct, int e);
CurveTensor to_curve(const Tensor& t);

struct PermutationMatch {
  std::array<std::vector<int>, 3> perms;  // permute_indices(a, perms) == b
};

/// Searches basis permutations mapping a to b. Throws SizeLimit when the
/// backtracking exceeds `node_budget` nodes.
std::optional<PermutationMatch> find_permutation(const Tensor& a, const Tensor& b,
                                                 std::uint64_t node_budget = 200000);
bool equal_up_to_permutation(const Tensor& a, const Tensor& b, std::uint64_t node_budget = 200000);

}  // namespace omegaforge
