#include "omegaforge/constructions/constructions.hpp"

#include <algorithm>
#include <set>

#include "omegaforge/tensor/tensor_json.hpp"

namespace omegaforge {

namespace {

void add_symmetric(Tensor& t, Index3 idx) {
  std::sort(idx.begin(), idx.end());
  do {
    t.set(idx, FieldElem(1));
  } while (std::next_permutation(idx.begin(), idx.end()));
}

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int k = from; k <= to; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

BlockGroup group(int label, std::vector<int> indices) { return {label, std::move(indices), {}}; }

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int k = from; k < to; ++k) out.push_back(k);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParams, what);
}

}  // namespace

NamedTensorSpec strassen(int n) {
  require(n >= 1, "strassen needs n >= 1");
  NamedTensorSpec s{"strassen", {{"n", n}}, Tensor({n + 1, n + 1, n}), {}, n + 1, "rank-one-curve certificate"};
  for (int i = 1; i <= n; ++i) {
    s.tensor.set({0, i, i - 1}, FieldElem(1));
    s.tensor.set({i, 0, i - 1}, FieldElem(1));
  }
  s.tensor.set_labels({numbered("u", 0, n), numbered("v", 0, n), numbered("w", 1, n)});
  for (int f = 0; f < 2; ++f) {
    s.blocking.factors[f].push_back(group(0, {0}));
    s.blocking.factors[f].push_back(group(1, range(1, n + 1)));
  }
  s.blocking.factors[2].push_back(group(1, range(0, n)));
  return s;
}

NamedTensorSpec cw_small(int m) {
  require(m >= 0, "cw-small needs m >= 0");
  NamedTensorSpec s{"cw_small", {{"m", m}}, Tensor({m + 1, m + 1, m + 1}), {}, m + 2, "border Waring rank m+2"};
  for (int i = 1; i <= m; ++i) add_symmetric(s.tensor, {0, i, i});
  auto names = numbered("x", 0, m);
  s.tensor.set_labels({names, names, names});
  for (int f = 0; f < 3; ++f) {
    s.blocking.factors[f].push_back(group(0, {0}));
    s.blocking.factors[f].push_back(group(1, range(1, m + 1)));
  }
  return s;
}

NamedTensorSpec cw_big(int m) {
  require(m >= 0, "cw-big needs m >= 0");
  NamedTensorSpec s{"cw_big", {{"m", m}}, Tensor({m + 2, m + 2, m + 2}), {}, m + 2, "border Waring rank m+2"};
  add_symmetric(s.tensor, {0, 0, m + 1});
  for (int i = 1; i <= m; ++i) add_symmetric(s.tensor, {0, i, i});
  auto names = numbered("x", 0, m + 1);
  s.tensor.set_labels({names, names, names});
  for (int f = 0; f < 3; ++f) {
    s.blocking.factors[f].push_back(group(0, {0}));
    s.blocking.factors[f].push_back(group(1, range(1, m + 1)));
    s.blocking.factors[f].push_back(group(2, {m + 1}));
  }
  return s;
}

Blocking hw_default_blocking(int m) {
  require(m >= 0, "hw needs m >= 0");
  Blocking d;
  for (int f = 0; f < 3; ++f) {
    d.factors[f].push_back(group(0, {0, 1}));
    d.factors[f].push_back(group(1, range(2, 3 * m + 2)));
    d.factors[f].push_back(group(2, range(3 * m + 2, 3 * m + 5)));
  }
  return d;
}

NamedTensorSpec hw_tensor(int m) {
  require(m >= 0, "hw needs m >= 0");
  const int n = 3 * m + 5;
  NamedTensorSpec s{"hw", {{"m", m}}, Tensor({n, n, n}), hw_default_blocking(m), n, "span-limit certificate"};
  const int a1 = 0, a2 = 1, b0 = 3 * m + 2, b1 = b0 + 1, b2 = b0 + 2;
  auto x = [](int j) { return 1 + j; };
  auto y = [m](int j) { return 1 + m + j; };
  auto z = [m](int j) { return 1 + 2 * m + j; };
  add_symmetric(s.tensor, {a1, a2, b0});
  add_symmetric(s.tensor, {a1, a1, b1});
  add_symmetric(s.tensor, {a2, a2, b2});
  for (int j = 1; j <= m; ++j) {
    add_symmetric(s.tensor, {a1, x(j), y(j)});
    add_symmetric(s.tensor, {a2, x(j), z(j)});
  }
  std::vector<std::string> names{"a1", "a2"};
  for (const char* stem : {"x", "y", "z"})
    for (const auto& l : numbered(stem, 1, m)) names.push_back(l);
  for (const auto& l : numbered("b", 0, 2)) names.push_back(l);
  s.tensor.set_labels({names, names, names});
  return s;
}

NamedTensorSpec smoothable_tensor(int m) {
  require(m >= 1, "smoothable needs m >= 1");
  const int n = 3 * m + 3, top1 = 3 * m + 1, top2 = 3 * m + 2;
  NamedTensorSpec s{"smoothable", {{"m", m}}, Tensor({n, n, n}), {}, n, "assumed-smoothable"};
  for (int k = 0; k < n; ++k) {
    s.tensor.set({0, k, k}, FieldElem(1));
    s.tensor.set({k, 0, k}, FieldElem(1));
  }
  for (int i = 1; i <= m; ++i) {
    s.tensor.set({i, m + i, top1}, FieldElem(1));
    s.tensor.set({m + i, i, top1}, FieldElem(1));
    s.tensor.set({i, 2 * m + i, top2}, FieldElem(1));
    s.tensor.set({2 * m + i, i, top2}, FieldElem(1));
  }
  auto duals = numbered("alpha", 0, n - 1);
  s.tensor.set_labels({duals, duals, numbered("a", 0, n - 1)});
  for (int f = 0; f < 2; ++f) {
    s.blocking.factors[f].push_back(group(0, {0}));
    s.blocking.factors[f].push_back(group(1, range(1, top1)));
    s.blocking.factors[f].push_back(group(2, {top1, top2}));
  }
  s.blocking.factors[2].push_back(group(0, {top1, top2}));
  s.blocking.factors[2].push_back(group(1, range(1, top1)));
  s.blocking.factors[2].push_back(group(2, {0}));
  return s;
}

NamedTensorSpec a3_tensor() {
  // Multiplication tensor of C[x]/(x²): 1·1 = 1, 1·x = x·1 = x.
  Tensor a1({2, 2, 2});
  a1.set({0, 0, 0}, FieldElem(1));
  a1.set({0, 1, 1}, FieldElem(1));
  a1.set({1, 0, 1}, FieldElem(1));
  Tensor cube = kronecker(a1, kronecker(a1, a1));
  // Row-major order a00,a01,a10,a11,b00,b01,b10,b11; swap positions 3 and 4
  // so the basis is sorted by degree.
  std::vector<int> perm{0, 1, 2, 4, 3, 5, 6, 7};
  Tensor t = permute_indices(cube, {perm, perm, perm});
  std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g", "h"};
  t.set_labels({names, names, names});
  NamedTensorSpec s{"a3", {}, t, {}, 8, "assumed-smoothable"};
  for (int f = 0; f < 3; ++f) {
    s.blocking.factors[f].push_back(group(0, {0}));
    s.blocking.factors[f].push_back(group(1, {1, 2, 3}));
    s.blocking.factors[f].push_back(group(2, {4, 5, 6}));
    s.blocking.factors[f].push_back(group(3, {7}));
  }
  return s;
}

NamedTensorSpec matmult_spec(int a, int b, int c) {
  NamedTensorSpec s{"matmult", {{"a", a}, {"b", b}, {"c", c}}, matmult_tensor(a, b, c), {}, 0, "trivial upper bound abc"};
  s.budget = static_cast<long>(a) * b * c;
  s.blocking = singleton_blocking(s.tensor.dims());
  return s;
}

NamedTensorSpec construct(const std::string& family, const std::map<std::string, int>& params) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorKind::BadParams, family + " requires --" + key);
    return it->second;
  };
  if (family == "strassen") return strassen(get("n"));
  if (family == "cw-small" || family == "cw_small") return cw_small(get("m"));
  if (family == "cw-big" || family == "cw_big") return cw_big(get("m"));
  if (family == "hw") return hw_tensor(get("m"));
  if (family == "smoothable") return smoothable_tensor(get("m"));
  if (family == "a3") return a3_tensor();
  if (family == "matmult") return matmult_spec(get("a"), get("b"), get("c"));
  throw Error(ErrorKind::BadParams, "unknown family: " + family);
}

nlohmann::json spec_to_json(const NamedTensorSpec& s) {
  return {{"schema_version", 1},
          {"kind", "named_tensor"},
          {"family", s.family},
          {"params", s.params},
          {"tensor", tensor_to_json(s.tensor)},
          {"blocking", blocking_to_json(s.blocking)},
          {"budget", s.budget},
          {"budget_provenance", s.budget_provenance}};
}

NamedTensorSpec spec_from_json(const nlohmann::json& j) {
  NamedTensorSpec s;
  try {
    s.family = j.at("family").get<std::string>();
    s.params = j.value("params", std::map<std::string, int>{});
    s.tensor = tensor_from_json(j.at("tensor"));
    s.blocking = blocking_from_json(j.at("blocking"));
    s.budget = j.at("budget").get<long>();
    s.budget_provenance = j.value("budget_provenance", std::string());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("named tensor JSON: ") + ex.what());
  }
  s.blocking.validate(s.tensor.dims());
  return s;
}

}  // namespace omegaforge
