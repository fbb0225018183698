#include "omegaforge/tensor/tensor.hpp"

#include <algorithm>
#include <set>

namespace omegaforge {

std::vector<FactorPerm> group_elements(Group g) {
  switch (g) {
    case Group::Trivial: return {{0, 1, 2}};
    case Group::Cyclic3: return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    case Group::S3: return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    case Group::Swap01: return {{0, 1, 2}, {1, 0, 2}};
    case Group::Swap02: return {{0, 1, 2}, {2, 1, 0}};
    case Group::Swap12: return {{0, 1, 2}, {0, 2, 1}};
  }
  return {{0, 1, 2}};
}

std::size_t group_order(Group g) { return group_elements(g).size(); }

std::string to_string(Group g) {
  switch (g) {
    case Group::Trivial: return "trivial";
    case Group::Cyclic3: return "cyclic3";
    case Group::S3: return "s3";
    case Group::Swap01: return "swap01";
    case Group::Swap02: return "swap02";
    case Group::Swap12: return "swap12";
  }
  return "trivial";
}

Group parse_group(const std::string& name) {
  for (Group g : {Group::Trivial, Group::Cyclic3, Group::S3, Group::Swap01, Group::Swap02, Group::Swap12})
    if (to_string(g) == name) return g;
  throw Error(ErrorKind::ParseError, "unknown group: " + name);
}

Tensor matmult_tensor(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error(ErrorKind::BadParams, "matmult dimensions must be positive");
  Tensor t({a * b, b * c, c * a});
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k) t.set({i * b + j, j * c + k, k * a + i}, FieldElem(1));
  return t;
}

Tensor unit_tensor() {
  Tensor t({1, 1, 1});
  t.set({0, 0, 0}, FieldElem(1));
  return t;
}

Tensor kronecker(const Tensor& a, const Tensor& b) {
  const Index3& da = a.dims();
  const Index3& db = b.dims();
  Tensor out({da[0] * db[0], da[1] * db[1], da[2] * db[2]});
  for (const auto& [ia, va] : a.entries())
    for (const auto& [ib, vb] : b.entries())
      out.set({ia[0] * db[0] + ib[0], ia[1] * db[1] + ib[1], ia[2] * db[2] + ib[2]}, va * vb);
  Labels labels;
  for (int f = 0; f < 3; ++f)
    for (int i = 0; i < da[f]; ++i)
      for (int j = 0; j < db[f]; ++j) labels[f].push_back("(" + a.label(f, i) + "," + b.label(f, j) + ")");
  out.set_labels(std::move(labels));
  return out;
}

Tensor permute_factors(const Tensor& t, const FactorPerm& perm) {
  const Index3& d = t.dims();
  Tensor out({d[perm[0]], d[perm[1]], d[perm[2]]});
  for (const auto& [idx, v] : t.entries()) out.set({idx[perm[0]], idx[perm[1]], idx[perm[2]]}, v);
  if (t.labels()) {
    const Labels& l = *t.labels();
    out.set_labels({l[perm[0]], l[perm[1]], l[perm[2]]});
  }
  return out;
}

Tensor symmetrize(const Tensor& t, Group g) {
  auto elems = group_elements(g);
  Tensor out = permute_factors(t, elems[0]);
  for (std::size_t k = 1; k < elems.size(); ++k) out = kronecker(out, permute_factors(t, elems[k]));
  return out;
}

Tensor direct_sum(const Tensor& a, const Tensor& b) {
  const Index3& da = a.dims();
  const Index3& db = b.dims();
  Tensor out({da[0] + db[0], da[1] + db[1], da[2] + db[2]});
  for (const auto& [idx, v] : a.entries()) out.set(idx, v);
  for (const auto& [idx, v] : b.entries()) out.set({idx[0] + da[0], idx[1] + da[1], idx[2] + da[2]}, v);
  return out;
}

Tensor apply_restriction(const Tensor& t, const FactorMaps& maps) {
  Index3 nd{};
  std::array<std::vector<std::vector<std::pair<int, FieldElem>>>, 3> cols;
  for (int f = 0; f < 3; ++f) {
    const auto& m = maps.maps[f];
    nd[f] = static_cast<int>(m.size());
    cols[f].resize(t.dim(f));
    for (int r = 0; r < nd[f]; ++r) {
      if (static_cast<int>(m[r].size()) != t.dim(f))
        throw Error(ErrorKind::ShapeMismatch, "factor map column count differs from tensor dimension");
      for (int c = 0; c < t.dim(f); ++c)
        if (!m[r][c].is_zero()) cols[f][c].emplace_back(r, m[r][c]);
    }
  }
  Tensor out(nd);
  for (const auto& [idx, v] : t.entries())
    for (const auto& [i, a] : cols[0][idx[0]])
      for (const auto& [j, b] : cols[1][idx[1]]) {
        FieldElem ab = v * a * b;
        for (const auto& [k, c] : cols[2][idx[2]]) out.add({i, j, k}, ab * c);
      }
  return out;
}

Tensor permute_indices(const Tensor& t, const std::array<std::vector<int>, 3>& perms) {
  for (int f = 0; f < 3; ++f)
    if (static_cast<int>(perms[f].size()) != t.dim(f))
      throw Error(ErrorKind::ShapeMismatch, "index permutation length differs from dimension");
  Tensor out(t.dims());
  for (const auto& [idx, v] : t.entries()) out.set({perms[0][idx[0]], perms[1][idx[1]], perms[2][idx[2]]}, v);
  if (t.labels()) {
    Labels l;
    for (int f = 0; f < 3; ++f) {
      l[f].resize(t.dim(f));
      for (int i = 0; i < t.dim(f); ++i) l[f][perms[f][i]] = (*t.labels())[f][i];
    }
    out.set_labels(std::move(l));
  }
  return out;
}

std::size_t flattening_rank(const Tensor& t, int factor) {
  const int g = factor == 0 ? 1 : 0;
  const int h = factor == 2 ? 1 : 2;
  std::map<std::pair<int, int>, std::size_t> column;
  for (const auto& [idx, v] : t.entries()) column.try_emplace({idx[g], idx[h]}, column.size());
  if (column.empty()) return 0;
  Matrix<FieldElem> m(t.dim(factor), std::vector<FieldElem>(column.size()));
  for (const auto& [idx, v] : t.entries()) m[idx[factor]][column[{idx[g], idx[h]}]] = v;
  return rank(std::move(m));
}

Conciseness is_concise(const Tensor& t) {
  Conciseness c;
  for (int f = 0; f < 3; ++f) {
    c.reduced_dims[f] = static_cast<int>(flattening_rank(t, f));
    c.concise[f] = c.reduced_dims[f] == t.dim(f);
  }
  return c;
}

std::vector<Matrix<FieldElem>> contraction_space(const Tensor& t, int factor) {
  const int g = factor == 0 ? 1 : 0;
  const int h = factor == 2 ? 1 : 2;
  std::vector<Matrix<FieldElem>> slices(t.dim(factor),
                                        Matrix<FieldElem>(t.dim(g), std::vector<FieldElem>(t.dim(h))));
  for (const auto& [idx, v] : t.entries()) slices[idx[factor]][idx[g]][idx[h]] = v;
  return slices;
}

bool is_symmetric(const Tensor& t) {
  for (const auto& p : group_elements(Group::S3)) {
    Tensor s = permute_factors(t, p);
    if (s.dims() != t.dims() || s.entries() != t.entries()) return false;
  }
  return true;
}

Tensor drop_zero_slices(const Tensor& t) {
  std::array<std::vector<int>, 3> remap;
  Index3 nd{};
  for (int f = 0; f < 3; ++f) {
    std::vector<bool> used(t.dim(f), false);
    for (const auto& [idx, v] : t.entries()) used[idx[f]] = true;
    remap[f].assign(t.dim(f), -1);
    for (int i = 0; i < t.dim(f); ++i)
      if (used[i]) remap[f][i] = nd[f]++;
  }
  Tensor out(nd);
  for (const auto& [idx, v] : t.entries()) out.set({remap[0][idx[0]], remap[1][idx[1]], remap[2][idx[2]]}, v);
  if (t.labels()) {
    Labels l;
    for (int f = 0; f < 3; ++f)
      for (int i = 0; i < t.dim(f); ++i)
        if (remap[f][i] >= 0) l[f].push_back((*t.labels())[f][i]);
    out.set_labels(std::move(l));
  }
  return out;
}

Tensor curve_limit(const CurveTensor& ct, int e) {
  Tensor out(ct.dims());
  for (const auto& [idx, p] : ct.entries()) {
    LaurentPoly scaled = laurent_scale(p, e);
    auto lo = scaled.min_exponent();
    if (lo && *lo < 0)
      throw Error(ErrorKind::NegativeOrder,
                  "entry (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                      std::to_string(idx[2]) + ") has order " + std::to_string(*lo),
                  *lo);
    out.set(idx, scaled.coefficient(0));
  }
  if (ct.labels()) out.set_labels(*ct.labels());
  return out;
}

CurveTensor to_curve(const Tensor& t) {
  CurveTensor out(t.dims());
  for (const auto& [idx, v] : t.entries()) out.set(idx, LaurentPoly(v));
  if (t.labels()) out.set_labels(*t.labels());
  return out;
}

}  // namespace omegaforge
