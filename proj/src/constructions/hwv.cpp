#include <algorithm>

#include "omegaforge/constructions/constructions.hpp"

namespace omegaforge {

Tensor symmetric_product(const LinearForm& x, const LinearForm& y, const LinearForm& z) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n || static_cast<int>(z.size()) != n)
    throw Error(ErrorKind::ShapeMismatch, "linear forms of different lengths");
  Tensor t({n, n, n});
  const std::array<const LinearForm*, 3> f{&x, &y, &z};
  const FieldElem sixth = FieldElem(make_rational(1, 6));
  std::array<int, 3> order{0, 1, 2};
  do {
    const LinearForm& p = *f[order[0]];
    const LinearForm& q = *f[order[1]];
    const LinearForm& r = *f[order[2]];
    for (int i = 0; i < n; ++i) {
      if (p[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (q[j].is_zero()) continue;
        FieldElem pq = sixth * p[i] * q[j];
        for (int k = 0; k < n; ++k)
          if (!r[k].is_zero()) t.add({i, j, k}, pq * r[k]);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return t;
}

Tensor substitute(const Tensor& source, const Substitution& sub) {
  if (!source.labels()) throw Error(ErrorKind::UnboundVariable, "source tensor has no variable labels");
  const int n = source.dim(0);
  std::vector<bool> occurs(n, false);
  for (const auto& [idx, v] : source.entries())
    for (int i : idx) occurs[i] = true;
  // Restriction by Sᵀ on every factor: row k of Sᵀ holds the coefficient of
  // target variable k in each source variable's image.
  Matrix<FieldElem> st(sub.target_dim, std::vector<FieldElem>(n));
  for (int v = 0; v < n; ++v) {
    const std::string& name = (*source.labels())[0][v];
    auto it = sub.images.find(name);
    if (it == sub.images.end()) {
      if (occurs[v]) throw Error(ErrorKind::UnboundVariable, "no image for variable " + name);
      continue;
    }
    if (static_cast<int>(it->second.size()) != sub.target_dim)
      throw Error(ErrorKind::ShapeMismatch, "image of " + name + " has wrong length");
    for (int k = 0; k < sub.target_dim; ++k) st[k][v] = it->second[k];
  }
  return apply_restriction(source, FactorMaps{{st, st, st}});
}

bool verify_substitution(const Tensor& source, const Substitution& sub, const Tensor& target) {
  Tensor image = substitute(source, sub);
  return image.dims() == target.dims() && image.entries() == target.entries();
}

namespace {

struct Gl {
  int n;
  int size() const { return n * n; }
  int index(int i, int j) const { return (i - 1) * n + (j - 1); }
  LinearForm e(int i, int j) const {
    LinearForm l(size());
    l[index(i, j)] = FieldElem(1);
    return l;
  }
  LinearForm identity() const {
    LinearForm l(size());
    for (int i = 1; i <= n; ++i) l[index(i, i)] = FieldElem(1);
    return l;
  }
  Labels labels() const {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) names.push_back("E_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return {names, names, names};
  }
  std::string name(int i, int j) const { return "E_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }
};

void accumulate(Tensor& acc, const Tensor& term, long sign) {
  for (const auto& [idx, v] : term.entries()) acc.add(idx, sign > 0 ? v : -v);
}

LinearForm var(int dim, int k, FieldElem c = FieldElem(1)) {
  LinearForm l(dim);
  l[k] = std::move(c);
  return l;
}

LinearForm combo(int dim, std::initializer_list<std::pair<int, FieldElem>> terms) {
  LinearForm l(dim);
  for (const auto& [k, c] : terms) l[k] += c;
  return l;
}

const FieldElem kI = FieldElem::imag_unit();

}  // namespace

std::vector<HwvIdentity> hwv_identities(int n) {
  if (n < 4) throw Error(ErrorKind::BadParams, "highest weight vector identities need n >= 4");
  Gl g{n};
  const int dim = g.size();
  std::vector<HwvIdentity> out;

  // I·E_{1,n}E_{2,n-1} − I·E_{1,n-1}E_{2,n} → T_cw,4
  {
    HwvIdentity h{"I E1n E2,n-1 - I E1,n-1 E2n", Tensor({dim, dim, dim}), {5, {}}, cw_small(4)};
    accumulate(h.source, symmetric_product(g.identity(), g.e(1, n), g.e(2, n - 1)), 1);
    accumulate(h.source, symmetric_product(g.identity(), g.e(1, n - 1), g.e(2, n)), -1);
    h.source.set_labels(g.labels());
    const int d = 5;
    for (int i = 1; i <= n; ++i) h.sub.images[g.name(i, i)] = LinearForm(d);
    h.sub.images[g.name(1, 1)] = var(d, 0, FieldElem(3));
    h.sub.images[g.name(1, n)] = combo(d, {{1, FieldElem(1)}, {2, kI}});
    h.sub.images[g.name(2, n - 1)] = combo(d, {{1, FieldElem(1)}, {2, -kI}});
    h.sub.images[g.name(1, n - 1)] = combo(d, {{3, FieldElem(1)}, {4, kI}});
    h.sub.images[g.name(2, n)] = combo(d, {{3, FieldElem(-1)}, {4, kI}});
    out.push_back(std::move(h));
  }

  // E_{1,n}E_{1,n-1}E_{2,n} − E_{1,n}E_{1,n}E_{2,n-1} → T_CW,2
  {
    HwvIdentity h{"E1n E1,n-1 E2n - E1n E1n E2,n-1", Tensor({dim, dim, dim}), {4, {}}, cw_big(2)};
    accumulate(h.source, symmetric_product(g.e(1, n), g.e(1, n - 1), g.e(2, n)), 1);
    accumulate(h.source, symmetric_product(g.e(1, n), g.e(1, n), g.e(2, n - 1)), -1);
    h.source.set_labels(g.labels());
    const int d = 4;
    h.sub.images[g.name(1, n)] = var(d, 0, FieldElem(3));
    h.sub.images[g.name(2, n - 1)] = var(d, 3, FieldElem(make_rational(-1, 3)));
    h.sub.images[g.name(1, n - 1)] = combo(d, {{1, FieldElem(1)}, {2, kI}});
    h.sub.images[g.name(2, n)] = combo(d, {{1, FieldElem(1)}, {2, -kI}});
    out.push_back(std::move(h));
  }

  // Σ_i I·E_{1,i}E_{i,n} → T_cw,2n-2
  {
    const int m = 2 * n - 2, d = m + 1;
    HwvIdentity h{"sum_i I E1i Ein", Tensor({dim, dim, dim}), {d, {}}, cw_small(m)};
    for (int i = 1; i <= n; ++i) accumulate(h.source, symmetric_product(g.identity(), g.e(1, i), g.e(i, n)), 1);
    h.source.set_labels(g.labels());
    const int p = 2 * n - 3, q = 2 * n - 2;
    const FieldElem half = FieldElem(make_rational(1, 2));
    for (int i = 1; i <= n; ++i) h.sub.images[g.name(i, i)] = LinearForm(d);
    h.sub.images[g.name(1, n)] = combo(d, {{p, FieldElem(1)}, {q, kI}});
    h.sub.images[g.name(1, 1)] = combo(d, {{p, half}, {q, -half * kI}});
    h.sub.images[g.name(n, n)] = combo(d, {{p, half}, {q, -half * kI}});
    h.sub.images[g.name(2, 2)] = combo(d, {{0, FieldElem(3)}, {p, FieldElem(-1)}, {q, kI}});
    for (int i = 2; i <= n - 1; ++i) {
      h.sub.images[g.name(1, i)] = combo(d, {{2 * i - 3, FieldElem(1)}, {2 * i - 2, kI}});
      h.sub.images[g.name(i, n)] = combo(d, {{2 * i - 3, FieldElem(1)}, {2 * i - 2, -kI}});
    }
    out.push_back(std::move(h));
  }

  // Σ_i E_{1,n}E_{1,i}E_{i,n} → T_CW,2n-4
  {
    const int m = 2 * n - 4, d = m + 2;
    HwvIdentity h{"sum_i E1n E1i Ein", Tensor({dim, dim, dim}), {d, {}}, cw_big(m)};
    for (int i = 1; i <= n; ++i) accumulate(h.source, symmetric_product(g.e(1, n), g.e(1, i), g.e(i, n)), 1);
    h.source.set_labels(g.labels());
    h.sub.images[g.name(1, n)] = var(d, 0, FieldElem(3));
    h.sub.images[g.name(1, 1)] = var(d, 2 * n - 3, FieldElem(make_rational(1, 6)));
    h.sub.images[g.name(n, n)] = var(d, 2 * n - 3, FieldElem(make_rational(1, 6)));
    for (int j = 2; j <= n - 1; ++j) {
      h.sub.images[g.name(1, j)] = combo(d, {{2 * j - 3, FieldElem(1)}, {2 * j - 2, kI}});
      h.sub.images[g.name(j, n)] = combo(d, {{2 * j - 3, FieldElem(1)}, {2 * j - 2, -kI}});
    }
    out.push_back(std::move(h));
  }

  // Σ_{i,j} E_{1,n}E_{i,j}E_{j,i} → T_CW,n²-2
  {
    const int m = n * n - 2, d = m + 2;
    HwvIdentity h{"sum_ij E1n Eij Eji", Tensor({dim, dim, dim}), {d, {}}, cw_big(m)};
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) accumulate(h.source, symmetric_product(g.e(1, n), g.e(i, j), g.e(j, i)), 1);
    h.source.set_labels(g.labels());
    h.sub.images[g.name(1, n)] = var(d, 0, FieldElem(3));
    h.sub.images[g.name(n, 1)] = var(d, m + 1, FieldElem(make_rational(1, 6)));
    int next = 1;
    for (int i = 1; i <= n; ++i) h.sub.images[g.name(i, i)] = var(d, next++);
    const FieldElem r = FieldElem(0, 0, make_rational(1, 2), 0);  // 1/√2 = √2/2
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (i == 1 && j == n) continue;
        const int p = next++, q = next++;
        h.sub.images[g.name(i, j)] = combo(d, {{p, r}, {q, r * kI}});
        h.sub.images[g.name(j, i)] = combo(d, {{p, r}, {q, -(r * kI)}});
      }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace omegaforge
