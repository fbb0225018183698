#include <algorithm>
#include <map>

#include "omegaforge/tensor/tensor.hpp"

namespace omegaforge {

namespace {

struct Side {
  std::vector<std::pair<Index3, int>> entries;           // index, value id
  std::array<std::vector<std::vector<int>>, 3> incident;  // factor -> index -> entry positions
};

using Colours = std::array<std::vector<long>, 3>;

class Search {
 public:
  Search(const Tensor& a, const Tensor& b, std::uint64_t budget) : a_(a), b_(b), budget_(budget) {
    std::map<FieldElem, int> values;
    for (const auto* t : {&a, &b})
      for (const auto& [idx, v] : t->entries()) values.try_emplace(v, static_cast<int>(values.size()));
    build(a, values, sa_);
    build(b, values, sb_);
  }

  std::optional<PermutationMatch> run() {
    Colours ca = initial(a_, sa_), cb = initial(b_, sb_);
    return descend(std::move(ca), std::move(cb));
  }

 private:
  static void build(const Tensor& t, const std::map<FieldElem, int>& values, Side& s) {
    for (int f = 0; f < 3; ++f) s.incident[f].resize(t.dim(f));
    for (const auto& [idx, v] : t.entries()) {
      for (int f = 0; f < 3; ++f) s.incident[f][idx[f]].push_back(static_cast<int>(s.entries.size()));
      s.entries.emplace_back(idx, values.at(v));
    }
  }

  // Slice rank plus the sorted value multiset of each slice.
  Colours initial(const Tensor& t, const Side& s) {
    Colours c;
    for (int f = 0; f < 3; ++f) {
      auto slices = contraction_space(t, f);
      c[f].resize(t.dim(f));
      for (int i = 0; i < t.dim(f); ++i) {
        std::vector<long> sig{f, static_cast<long>(rank(slices[i]))};
        std::vector<long> vals;
        for (int e : s.incident[f][i]) vals.push_back(s.entries[e].second);
        std::sort(vals.begin(), vals.end());
        sig.insert(sig.end(), vals.begin(), vals.end());
        c[f][i] = intern(sig);
      }
    }
    return c;
  }

  long intern(const std::vector<long>& sig) {
    auto [it, inserted] = ids_.try_emplace(sig, static_cast<long>(ids_.size()));
    return it->second;
  }

  static std::size_t classes(const Colours& c) {
    std::size_t n = 0;
    for (int f = 0; f < 3; ++f) {
      std::vector<long> v = c[f];
      std::sort(v.begin(), v.end());
      n += std::unique(v.begin(), v.end()) - v.begin();
    }
    return n;
  }

  Colours step(const Colours& c, const Side& s) {
    Colours out;
    for (int f = 0; f < 3; ++f) {
      out[f].resize(c[f].size());
      for (std::size_t i = 0; i < c[f].size(); ++i) {
        std::vector<std::array<long, 3>> nbrs;
        for (int e : s.incident[f][i]) {
          const auto& [idx, val] = s.entries[e];
          std::array<long, 3> n{val, 0, 0};
          int slot = 1;
          for (int g = 0; g < 3; ++g)
            if (g != f) n[slot++] = c[g][idx[g]];
          nbrs.push_back(n);
        }
        std::sort(nbrs.begin(), nbrs.end());
        std::vector<long> sig{f, c[f][i]};
        for (const auto& n : nbrs) sig.insert(sig.end(), n.begin(), n.end());
        out[f][i] = intern(sig);
      }
    }
    return out;
  }

  // Joint refinement; returns false if the colour histograms diverge.
  bool refine(Colours& ca, Colours& cb) {
    for (;;) {
      std::size_t before = classes(ca) + classes(cb);
      Colours na = step(ca, sa_), nb = step(cb, sb_);
      ca = std::move(na);
      cb = std::move(nb);
      if (!same_histogram(ca, cb)) return false;
      if (classes(ca) + classes(cb) == before) return true;
    }
  }

  static bool same_histogram(const Colours& ca, const Colours& cb) {
    for (int f = 0; f < 3; ++f) {
      std::vector<long> x = ca[f], y = cb[f];
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return false;
    }
    return true;
  }

  std::optional<PermutationMatch> descend(Colours ca, Colours cb) {
    if (++nodes_ > budget_)
      throw Error(ErrorKind::SizeLimit, "permutation search exceeded node budget", static_cast<long>(budget_));
    if (!refine(ca, cb)) return std::nullopt;

    int best_f = -1;
    long best_colour = 0;
    std::size_t best_size = 0;
    for (int f = 0; f < 3; ++f) {
      std::map<long, std::size_t> count;
      for (long c : ca[f]) ++count[c];
      for (const auto& [c, n] : count)
        if (n > 1 && (best_f < 0 || n < best_size)) {
          best_f = f;
          best_colour = c;
          best_size = n;
        }
    }

    if (best_f < 0) {
      PermutationMatch m;
      for (int f = 0; f < 3; ++f) {
        std::map<long, int> where;
        for (std::size_t j = 0; j < cb[f].size(); ++j) where[cb[f][j]] = static_cast<int>(j);
        for (long c : ca[f]) m.perms[f].push_back(where.at(c));
      }
      if (permute_indices(a_, m.perms).entries() == b_.entries()) return m;
      return std::nullopt;
    }

    std::size_t pick = 0;
    while (ca[best_f][pick] != best_colour) ++pick;
    for (std::size_t j = 0; j < cb[best_f].size(); ++j) {
      if (cb[best_f][j] != best_colour) continue;
      Colours na = ca, nb = cb;
      long fresh = intern({-1, static_cast<long>(nodes_), static_cast<long>(j)});
      na[best_f][pick] = fresh;
      nb[best_f][j] = fresh;
      if (auto found = descend(std::move(na), std::move(nb))) return found;
    }
    return std::nullopt;
  }

  const Tensor& a_;
  const Tensor& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Side sa_, sb_;
  std::map<std::vector<long>, long> ids_;
};

}  // namespace

std::optional<PermutationMatch> find_permutation(const Tensor& a, const Tensor& b, std::uint64_t node_budget) {
  if (a.dims() != b.dims() || a.size() != b.size()) return std::nullopt;
  return Search(a, b, node_budget).run();
}

bool equal_up_to_permutation(const Tensor& a, const Tensor& b, std::uint64_t node_budget) {
  return find_permutation(a, b, node_budget).has_value();
}

}  // namespace omegaforge
