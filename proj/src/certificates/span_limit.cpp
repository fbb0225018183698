#include <algorithm>
#include <map>
#include <set>

#include "omegaforge/certificates/certificates.hpp"

namespace omegaforge {

std::vector<SparseMatrix> slice_matrices(const Tensor& t) {
  std::vector<SparseMatrix> out(t.dim(2));
  for (const auto& [idx, v] : t.entries()) out[idx[2]][{idx[0], idx[1]}] = v;
  return out;
}

namespace {

std::string entry_name(const std::pair<int, int>& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::vector<FieldElem> flatten(const SparseMatrix& m, int dim) {
  std::vector<FieldElem> v(static_cast<std::size_t>(dim) * dim);
  for (const auto& [e, x] : m) v[static_cast<std::size_t>(e.first) * dim + e.second] = x;
  return v;
}

long span_rank(const std::vector<SparseMatrix>& ms, int dim) {
  Matrix<FieldElem> rows;
  for (const auto& m : ms)
    if (!m.empty()) rows.push_back(flatten(m, dim));
  return rows.empty() ? 0 : static_cast<long>(rank(rows));
}

SparseMatrix recipe_limit(const SpanLimitCert& cert, const Recipe& recipe) {
  CurveMatrix acc;
  for (const auto& [name, coeff] : recipe.combination) {
    auto it = std::find(cert.generator_names.begin(), cert.generator_names.end(), name);
    if (it == cert.generator_names.end()) throw Error(ErrorKind::ParseError, "recipe uses unknown generator " + name);
    const CurveMatrix& g = cert.generators[it - cert.generator_names.begin()];
    for (const auto& [e, p] : g) {
      auto [slot, inserted] = acc.try_emplace(e, LaurentPoly());
      slot->second += coeff * p;
    }
  }
  SparseMatrix out;
  for (const auto& [e, p] : acc) {
    LaurentPoly scaled = laurent_scale(p, recipe.e);
    auto lo = scaled.min_exponent();
    if (lo && *lo < 0)
      throw Error(ErrorKind::NegativeOrder, recipe.name + ": entry " + entry_name(e) + " has order " + std::to_string(*lo), *lo);
    FieldElem v = scaled.coefficient(0);
    if (!v.is_zero()) out[e] = v;
  }
  return out;
}

}  // namespace

CertReport verify_span_limit_cert(const SpanLimitCert& cert) {
  CertReport r;
  r.kind = "span_limit";
  r.name = cert.name;
  r.term_count = static_cast<long>(cert.generators.size());
  try {
    if (cert.generators.size() != cert.generator_names.size())
      throw Error(ErrorKind::ShapeMismatch, "generator names and matrices differ in number");
    if (cert.target.dim(0) != cert.dim || cert.target.dim(1) != cert.dim)
      throw Error(ErrorKind::ShapeMismatch, "target slices are not dim × dim");
    std::vector<SparseMatrix> limits;
    for (const auto& recipe : cert.recipes) {
      SparseMatrix got = recipe_limit(cert, recipe);
      SparseMatrix want;
      for (const auto& [e, v] : recipe.limit)
        if (!v.is_zero()) want[e] = v;
      if (got != want) {
        for (const auto& [e, v] : want)
          if (!got.count(e) || got.at(e) != v)
            throw Error(ErrorKind::Mismatch, recipe.name + ": entry " + entry_name(e) + " differs from the claimed limit");
        for (const auto& [e, v] : got)
          if (!want.count(e))
            throw Error(ErrorKind::Mismatch, recipe.name + ": entry " + entry_name(e) + " missing from the claimed limit");
      }
      r.recipe_results.push_back(recipe.name + ": ok");
      limits.push_back(std::move(want));
    }
    std::vector<SparseMatrix> slices = slice_matrices(cert.target);
    r.target_dimension = span_rank(slices, cert.dim);
    r.span_dimension = span_rank(limits, cert.dim);
    std::vector<SparseMatrix> both = slices;
    both.insert(both.end(), limits.begin(), limits.end());
    if (span_rank(both, cert.dim) != r.target_dimension)
      throw Error(ErrorKind::Mismatch, "a recipe limit lies outside the target slice space");
    if (r.span_dimension != r.target_dimension)
      throw Error(ErrorKind::SpanDeficit,
                  "limits span " + std::to_string(r.span_dimension) + " of " + std::to_string(r.target_dimension),
                  r.span_dimension);
    r.pass = true;
  } catch (const Error& ex) {
    r.error = to_string(ex.kind());
    r.detail = ex.what();
  }
  return r;
}

std::vector<bool> generators_rank_one(const SpanLimitCert& cert) {
  std::vector<bool> out;
  for (const auto& g : cert.generators) {
    std::set<int> rows, cols;
    for (const auto& [e, p] : g) {
      rows.insert(e.first);
      cols.insert(e.second);
    }
    auto at = [&](int i, int j) {
      auto it = g.find({i, j});
      return it == g.end() ? LaurentPoly() : it->second;
    };
    bool ok = true;
    for (auto i = rows.begin(); ok && i != rows.end(); ++i)
      for (auto k = std::next(i); ok && k != rows.end(); ++k)
        for (auto j = cols.begin(); ok && j != cols.end(); ++j)
          for (auto l = std::next(j); ok && l != cols.end(); ++l)
            ok = at(*i, *j) * at(*k, *l) == at(*i, *l) * at(*k, *j);
    out.push_back(ok);
  }
  return out;
}

namespace {

using Form = std::map<int, LaurentPoly>;

CurveMatrix square(const Form& v) {
  CurveMatrix m;
  for (const auto& [i, a] : v)
    for (const auto& [j, b] : v) {
      LaurentPoly p = a * b;
      if (!p.is_zero()) m[{i, j}] = p;
    }
  return m;
}

LaurentPoly t(int e) { return LaurentPoly::t_pow(e); }
LaurentPoly c(long p, long q = 1) { return LaurentPoly(FieldElem(make_rational(p, q))); }
LaurentPoly root2(long p, long q) { return LaurentPoly(FieldElem(0, 0, make_rational(p, q), 0)); }

void sym(SparseMatrix& m, int i, int j, long v) {
  m[{i, j}] = FieldElem(v);
  m[{j, i}] = FieldElem(v);
}

}  // namespace

SpanLimitCert build_hw_span_cert(int m) {
  if (m < 1) throw Error(ErrorKind::BadParams, "span-limit certificate needs m >= 1");
  NamedTensorSpec spec = hw_tensor(m);
  const int n = spec.tensor.dim(0);
  const int a1 = 0, a2 = 1, b0 = 3 * m + 2, b1 = b0 + 1, b2 = b0 + 2;
  auto x = [](int i) { return 1 + i; };
  auto y = [m](int i) { return 1 + m + i; };
  auto z = [m](int i) { return 1 + 2 * m + i; };
  SpanLimitCert cert;
  cert.name = "hw span-limit m=" + std::to_string(m);
  cert.dim = n;
  cert.target = spec.tensor;
  auto add = [&](const std::string& name, CurveMatrix g) {
    cert.generator_names.push_back(name);
    cert.generators.push_back(std::move(g));
  };
  for (int i = 1; i <= m; ++i) {
    const std::string s = std::to_string(i);
    add("A" + s, square({{a1, t(-1)}, {x(i), t(1)}, {y(i), t(2)}}));
    add("B" + s, square({{a2, t(-1)}, {x(i), t(1)}, {z(i), t(2)}}));
    add("C" + s, square({{a1, root2(1, 2) * t(-1)}, {a2, root2(1, 2) * t(-1)}, {x(i), root2(1, 1) * t(1)}}));
  }
  add("D", square({{a1, c(1)}, {a2, c(-1)}}));
  Form e1{{a1, t(-2)}, {b0, t(5)}, {b1, -t(5)}}, e2{{a2, t(-2)}, {b0, t(5)}, {b2, -t(5)}};
  Form f{{a1, root2(1, 2) * t(-2)}, {a2, root2(1, 2) * t(-2)}, {b0, root2(2, 1) * t(5)}};
  for (int j = 1; j <= m; ++j) {
    e1[x(j)] = t(2);
    e1[y(j)] = t(3);
    e2[x(j)] = t(2);
    e2[z(j)] = t(3);
    f[x(j)] = root2(1, 1) * t(2);
  }
  add("E1", square(e1));
  add("E2", square(e2));
  add("F", square(f));
  // l = (m t² − 1)² / (2 t⁸)
  const LaurentPoly l = c(static_cast<long>(m) * m, 2) * t(-4) - c(m) * t(-6) + c(1, 2) * t(-8);
  const LaurentPoly half = c(1, 2);
  CurveMatrix g;
  g[{a1, a1}] = t(-4) - c(m) * t(-2) - half - l;
  g[{a2, a2}] = c(m) * t(-2) - t(-4) - half - l;
  g[{a1, a2}] = (c(2) * l - c(1)) * half;
  g[{a2, a1}] = g[{a1, a2}];
  add("G", g);

  for (int i = 1; i <= m; ++i) {
    const std::string s = std::to_string(i);
    Recipe r1{"A" + s + " - t^2 E1", {{"A" + s, c(1)}, {"E1", -t(2)}}, 0, {}};
    sym(r1.limit, a1, x(i), 1);
    Recipe r2{"B" + s + " - t^2 E2", {{"B" + s, c(1)}, {"E2", -t(2)}}, 0, {}};
    sym(r2.limit, a2, x(i), 1);
    Recipe r3{"t^-1 (A" + s + " + B" + s + " - C" + s + " - D/(2t^2))",
              {{"A" + s, c(1)}, {"B" + s, c(1)}, {"C" + s, c(-1)}, {"D", c(-1, 2) * t(-2)}}, -1, {}};
    sym(r3.limit, a1, y(i), 1);
    sym(r3.limit, a2, z(i), 1);
    cert.recipes.push_back(r1);
    cert.recipes.push_back(r2);
    cert.recipes.push_back(r3);
  }
  Recipe r4{"t^2 A1", {{"A1", t(2)}}, 0, {}};
  r4.limit[{a1, a1}] = FieldElem(1);
  Recipe r5{"t^2 B1", {{"B1", t(2)}}, 0, {}};
  r5.limit[{a2, a2}] = FieldElem(1);
  Recipe r6{"t^2 A1 + t^2 B1 - D", {{"A1", t(2)}, {"B1", t(2)}, {"D", c(-1)}}, 0, {}};
  sym(r6.limit, a1, a2, 1);
  cert.recipes.push_back(r4);
  cert.recipes.push_back(r5);
  cert.recipes.push_back(r6);

  Recipe r7{"t^-3 (sum A + sum B - sum C - E1 - E2 + (1/(2t^4) - m/(2t^2)) D + F)", {}, -3, {}};
  Recipe r8{"t^-3 (sum A - sum B - E1 + E2 + t^4 F + l D + G)", {}, -3, {}};
  for (int i = 1; i <= m; ++i) {
    const std::string s = std::to_string(i);
    r7.combination.push_back({"A" + s, c(1)});
    r7.combination.push_back({"B" + s, c(1)});
    r7.combination.push_back({"C" + s, c(-1)});
    r8.combination.push_back({"A" + s, c(1)});
    r8.combination.push_back({"B" + s, c(-1)});
  }
  r7.combination.push_back({"E1", c(-1)});
  r7.combination.push_back({"E2", c(-1)});
  r7.combination.push_back({"D", c(1, 2) * t(-4) - c(m, 2) * t(-2)});
  r7.combination.push_back({"F", c(1)});
  r8.combination.push_back({"E1", c(-1)});
  r8.combination.push_back({"E2", c(1)});
  r8.combination.push_back({"F", t(4)});
  r8.combination.push_back({"D", l});
  r8.combination.push_back({"G", c(1)});
  // Slices of a1 plus or minus slices of a2.
  for (int sign : {1, -1}) {
    Recipe& r = sign > 0 ? r7 : r8;
    sym(r.limit, a2, b0, 1);
    sym(r.limit, a1, b1, 1);
    sym(r.limit, a1, b0, sign);
    sym(r.limit, a2, b2, sign);
    for (int j = 1; j <= m; ++j) {
      sym(r.limit, x(j), y(j), 1);
      sym(r.limit, x(j), z(j), sign);
    }
  }
  cert.recipes.push_back(r7);
  cert.recipes.push_back(r8);
  return cert;
}

}  // namespace omegaforge
