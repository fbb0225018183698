#include "omegaforge/algebra/algebra.hpp"

#include <algorithm>

#include "omegaforge/tensor/tensor_json.hpp"

namespace omegaforge {

Tensor multiplication_tensor(const Algebra& a) {
  Tensor t = a.structure;
  t.clear_labels();
  if (!a.labels.empty()) t.set_labels({a.labels, a.labels, a.labels});
  return t;
}

namespace {

Algebra with_unit(int dim, std::vector<std::string> labels) {
  Algebra a{dim, 0, std::move(labels), Tensor({dim, dim, dim})};
  for (int k = 0; k < dim; ++k) {
    a.structure.set({0, k, k}, FieldElem(1));
    a.structure.set({k, 0, k}, FieldElem(1));
  }
  return a;
}

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int k = 0; k < count; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

}  // namespace

Algebra cw_algebra(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "cw algebra needs n >= 1");
  Algebra a = with_unit(n + 2, numbered("a", n + 2));
  for (int i = 1; i <= n; ++i) a.structure.set({i, i, n + 1}, FieldElem(1));
  return a;
}

Algebra cw_algebra_paired(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "cw algebra needs n >= 1");
  Algebra a = with_unit(n + 2, numbered("a", n + 2));
  for (int i = 1; i <= n; ++i) a.structure.set({i, n + 1 - i, n + 1}, FieldElem(1));
  return a;
}

Algebra smoothable_algebra(int m) {
  if (m < 1) throw Error(ErrorKind::BadParams, "smoothable algebra needs m >= 1");
  const int dim = 3 * m + 3;
  Algebra a = with_unit(dim, numbered("a", dim));
  for (int i = 1; i <= m; ++i) {
    a.structure.set({i, m + i, 3 * m + 1}, FieldElem(1));
    a.structure.set({m + i, i, 3 * m + 1}, FieldElem(1));
    a.structure.set({i, 2 * m + i, 3 * m + 2}, FieldElem(1));
    a.structure.set({2 * m + i, i, 3 * m + 2}, FieldElem(1));
  }
  return a;
}

Algebra monomial_apolar_algebra(const Monomial& f, const std::vector<std::string>& variables) {
  for (int e : f)
    if (e < 0) throw Error(ErrorKind::BadParams, "negative exponent");
  // Mixed-radix enumeration of divisors, first variable most significant.
  std::vector<Monomial> basis{{}};
  for (int e : f) {
    std::vector<Monomial> next;
    for (const auto& b : basis)
      for (int k = 0; k <= e; ++k) {
        Monomial c = b;
        c.push_back(k);
        next.push_back(std::move(c));
      }
    basis = std::move(next);
  }
  const int dim = static_cast<int>(basis.size());
  auto position = [&](const Monomial& b) {
    int idx = 0;
    for (std::size_t v = 0; v < f.size(); ++v) idx = idx * (f[v] + 1) + b[v];
    return idx;
  };
  std::vector<std::string> labels;
  for (const auto& b : basis) {
    std::string name;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (b[v] == 0) continue;
      std::string var = v < variables.size() ? variables[v] : "x" + std::to_string(v + 1);
      name += "d" + var + (b[v] > 1 ? "^" + std::to_string(b[v]) : "");
    }
    labels.push_back(name.empty() ? "1" : name);
  }
  Algebra a{dim, 0, labels, Tensor({dim, dim, dim})};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Monomial s(f.size());
      bool fits = true;
      for (std::size_t v = 0; v < f.size(); ++v) {
        s[v] = basis[i][v] + basis[j][v];
        if (s[v] > f[v]) fits = false;
      }
      if (fits) a.structure.set({i, j, position(s)}, FieldElem(1));
    }
  return a;
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  Algebra out;
  out.dim = a.dim * b.dim;
  out.unit = a.unit * b.dim + b.unit;
  out.structure = kronecker(a.structure, b.structure);
  out.structure.clear_labels();
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      out.labels.push_back("(" + (a.labels.empty() ? std::to_string(i) : a.labels[i]) + "," +
                           (b.labels.empty() ? std::to_string(j) : b.labels[j]) + ")");
  return out;
}

std::vector<FieldElem> multiply(const Algebra& a, const std::vector<FieldElem>& u, const std::vector<FieldElem>& v) {
  std::vector<FieldElem> out(a.dim);
  for (const auto& [idx, c] : a.structure.entries())
    if (!u[idx[0]].is_zero() && !v[idx[1]].is_zero()) out[idx[2]] += u[idx[0]] * v[idx[1]] * c;
  return out;
}

bool is_commutative(const Algebra& a) {
  for (const auto& [idx, c] : a.structure.entries())
    if (a.structure.get({idx[1], idx[0], idx[2]}) != c) return false;
  return true;
}

namespace {

std::vector<FieldElem> basis_vector(int dim, int k) {
  std::vector<FieldElem> v(dim);
  v[k] = FieldElem(1);
  return v;
}

}  // namespace

bool is_associative(const Algebra& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      auto eij = multiply(a, basis_vector(a.dim, i), basis_vector(a.dim, j));
      for (int k = 0; k < a.dim; ++k) {
        auto ejk = multiply(a, basis_vector(a.dim, j), basis_vector(a.dim, k));
        if (multiply(a, eij, basis_vector(a.dim, k)) != multiply(a, basis_vector(a.dim, i), ejk)) return false;
      }
    }
  return true;
}

bool unit_is_identity(const Algebra& a) {
  for (int k = 0; k < a.dim; ++k) {
    auto e = basis_vector(a.dim, k);
    if (multiply(a, basis_vector(a.dim, a.unit), e) != e || multiply(a, e, basis_vector(a.dim, a.unit)) != e)
      return false;
  }
  return true;
}

std::vector<int> hilbert_function(const Algebra& a) {
  if (!unit_is_identity(a)) throw Error(ErrorKind::NotLocalBasis, "unit does not act as identity");
  for (int k = 0; k < a.dim; ++k) {
    if (k == a.unit) continue;
    auto power = basis_vector(a.dim, k);
    for (int e = 0; e < a.dim && !std::all_of(power.begin(), power.end(), [](const FieldElem& x) { return x.is_zero(); }); ++e)
      power = multiply(a, power, basis_vector(a.dim, k));
    if (!std::all_of(power.begin(), power.end(), [](const FieldElem& x) { return x.is_zero(); }))
      throw Error(ErrorKind::NotLocalBasis, "basis element is not nilpotent");
  }
  // m = span of the non-unit basis vectors; m^{i+1} = span(m^i · m).
  Matrix<FieldElem> ideal;
  for (int k = 0; k < a.dim; ++k)
    if (k != a.unit) ideal.push_back(basis_vector(a.dim, k));
  std::vector<int> h{1};
  int prev = static_cast<int>(rank(ideal));
  if (prev != a.dim - 1) throw Error(ErrorKind::NotLocalBasis, "maximal ideal has wrong dimension");
  while (prev > 0) {
    Matrix<FieldElem> next;
    for (const auto& u : ideal)
      for (int k = 0; k < a.dim; ++k)
        if (k != a.unit) {
          auto w = multiply(a, u, basis_vector(a.dim, k));
          if (!std::all_of(w.begin(), w.end(), [](const FieldElem& x) { return x.is_zero(); })) next.push_back(w);
        }
    int r = 0;
    if (!next.empty()) {
      Matrix<FieldElem> red = next;
      auto piv = rref(red);
      r = static_cast<int>(piv.size());
      red.resize(r);
      next = std::move(red);
    }
    if (r >= prev) throw Error(ErrorKind::NotLocalBasis, "powers of the maximal ideal do not decrease");
    h.push_back(prev - r);
    prev = r;
    ideal = std::move(next);
  }
  return h;
}

nlohmann::json algebra_to_json(const Algebra& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [idx, c] : a.structure.entries()) entries.push_back({idx[0], idx[1], idx[2], to_string(c)});
  return {{"dim", a.dim}, {"unit", a.unit}, {"labels", a.labels}, {"structure_entries", entries}};
}

}  // namespace omegaforge
