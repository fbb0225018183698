#include "omegaforge/blocking/blocking.hpp"

#include "omegaforge/blocking/exact_lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace omegaforge {

namespace {

const char* const kFactorNames[3] = {"U", "V", "W"};

}  // namespace

void Blocking::validate(const Index3& dims) const {
  for (int f = 0; f < 3; ++f) {
    std::vector<int> seen(dims[f], 0);
    std::set<int> labels;
    for (const auto& g : factors[f]) {
      if (!labels.insert(g.label).second)
        throw Error(ErrorKind::ShapeMismatch, "duplicate block label in factor " + std::string(kFactorNames[f]));
      for (int i : g.indices) {
        if (i < 0 || i >= dims[f]) throw Error(ErrorKind::ShapeMismatch, "block index out of range");
        if (seen[i]++) throw Error(ErrorKind::ShapeMismatch, "block groups overlap");
      }
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0)
      throw Error(ErrorKind::ShapeMismatch, "block groups do not cover factor " + std::string(kFactorNames[f]));
  }
}

const BlockGroup& Blocking::group(int factor, int label) const {
  for (const auto& g : factors[factor])
    if (g.label == label) return g;
  throw Error(ErrorKind::ShapeMismatch, "no block with label " + std::to_string(label));
}

std::array<std::vector<int>, 3> Blocking::label_map(const Index3& dims) const {
  validate(dims);
  std::array<std::vector<int>, 3> out;
  for (int f = 0; f < 3; ++f) {
    out[f].assign(dims[f], 0);
    for (const auto& g : factors[f])
      for (int i : g.indices) out[f][i] = g.label;
  }
  return out;
}

Blocking singleton_blocking(const Index3& dims) {
  Blocking d;
  for (int f = 0; f < 3; ++f)
    for (int i = 0; i < dims[f]; ++i) d.factors[f].push_back({i, {i}, {}});
  return d;
}

SupportSet support(const Tensor& t, const Blocking& d) {
  auto lm = d.label_map(t.dims());
  SupportSet s;
  for (const auto& [idx, v] : t.entries()) s.insert({lm[0][idx[0]], lm[1][idx[1]], lm[2][idx[2]]});
  return s;
}

Tensor block_component(const Tensor& t, const Blocking& d, const Triple& triple) {
  d.validate(t.dims());
  std::array<std::vector<int>, 3> pos;
  Index3 nd{};
  std::array<const BlockGroup*, 3> groups{};
  for (int f = 0; f < 3; ++f) {
    groups[f] = &d.group(f, triple[f]);
    pos[f].assign(t.dim(f), -1);
    for (int i : groups[f]->indices) pos[f][i] = nd[f]++;
  }
  Tensor out(nd);
  for (const auto& [idx, v] : t.entries()) {
    Index3 n{pos[0][idx[0]], pos[1][idx[1]], pos[2][idx[2]]};
    if (n[0] >= 0 && n[1] >= 0 && n[2] >= 0) out.set(n, v);
  }
  if (t.labels()) {
    Labels l;
    for (int f = 0; f < 3; ++f)
      for (int i : groups[f]->indices) l[f].push_back((*t.labels())[f][i]);
    out.set_labels(std::move(l));
  }
  return out;
}

std::vector<int> labels_of(const SupportSet& phi, int factor) {
  std::set<int> s;
  for (const auto& t : phi) s.insert(t[factor]);
  return {s.begin(), s.end()};
}

Matrix<Rational> marginal_matrix(const SupportSet& phi) {
  Matrix<Rational> m;
  for (int f = 0; f < 3; ++f)
    for (int label : labels_of(phi, f)) {
      std::vector<Rational> row;
      for (const auto& t : phi) row.emplace_back(t[f] == label ? 1 : 0);
      m.push_back(std::move(row));
    }
  return m;
}

bool validate_tight_witness(const SupportSet& phi, const TightWitness& w) {
  for (int f = 0; f < 3; ++f) {
    std::set<std::vector<long>> images;
    for (int label : labels_of(phi, f)) {
      auto it = w.maps[f].find(label);
      if (it == w.maps[f].end() || static_cast<int>(it->second.size()) != w.r) return false;
      for (long v : it->second)
        if (std::labs(v) > w.bound) return false;
      if (!images.insert(it->second).second) return false;
    }
  }
  for (const auto& t : phi)
    for (int c = 0; c < w.r; ++c)
      if (w.maps[0].at(t[0])[c] + w.maps[1].at(t[1])[c] + w.maps[2].at(t[2])[c] != 0) return false;
  return true;
}

namespace {

struct TightSearch {
  std::vector<Triple> triples;
  std::array<std::vector<int>, 3> labels;
  std::array<std::map<int, int>, 3> slot;  // label -> variable number
  int nvars = 0;
  int bound = 0;
  std::vector<std::optional<long>> value;
  std::vector<std::array<int, 3>> cons;  // variable numbers per triple

  explicit TightSearch(const SupportSet& phi, int b) : triples(phi.begin(), phi.end()), bound(b) {
    for (int f = 0; f < 3; ++f) {
      labels[f] = labels_of(phi, f);
      for (int l : labels[f]) slot[f][l] = nvars++;
    }
    value.assign(nvars, std::nullopt);
    for (const auto& t : triples) cons.push_back({slot[0][t[0]], slot[1][t[1]], slot[2][t[2]]});
  }

  bool consistent() const {
    for (const auto& c : cons) {
      if (value[c[0]] && value[c[1]] && value[c[2]] && *value[c[0]] + *value[c[1]] + *value[c[2]] != 0)
        return false;
    }
    for (int f = 0, base = 0; f < 3; base += static_cast<int>(labels[f].size()), ++f) {
      std::set<long> used;
      for (std::size_t k = 0; k < labels[f].size(); ++k) {
        const auto& v = value[base + k];
        if (v && !used.insert(*v).second) return false;
      }
    }
    return true;
  }

  // Assigns forced values; returns false on contradiction.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : cons) {
        int unknown = -1, count = 0;
        long sum = 0;
        for (int v : c) {
          if (value[v])
            sum += *value[v];
          else {
            unknown = v;
            ++count;
          }
        }
        if (count == 1) {
          if (std::labs(sum) > bound) return false;
          value[unknown] = -sum;
          trail.push_back(unknown);
          changed = true;
        }
      }
      if (!consistent()) return false;
    }
    return true;
  }

  bool solve() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) value[v].reset();
      return false;
    }
    int next = -1;
    for (int v = 0; v < nvars; ++v)
      if (!value[v]) {
        next = v;
        break;
      }
    if (next < 0) return true;
    for (long x = -bound; x <= bound; ++x) {
      value[next] = x;
      if (consistent() && solve()) return true;
      value[next].reset();
    }
    for (int v : trail) value[v].reset();
    return false;
  }

  TightWitness witness() const {
    TightWitness w;
    w.bound = bound;
    for (int f = 0; f < 3; ++f)
      for (int l : labels[f]) w.maps[f][l] = {*value[slot[f].at(l)]};
    return w;
  }
};

std::optional<TightWitness> canonical_witness(const SupportSet& phi, int bound) {
  if (phi.empty()) return std::nullopt;
  const Triple& first = *phi.begin();
  const long s = first[0] + first[1] + first[2];
  TightWitness w;
  w.bound = bound;
  for (const auto& t : phi) {
    w.maps[0][t[0]] = {t[0]};
    w.maps[1][t[1]] = {t[1]};
    w.maps[2][t[2]] = {t[2] - s};
  }
  if (validate_tight_witness(phi, w)) return w;
  return std::nullopt;
}

}  // namespace

std::optional<TightWitness> is_tight(const SupportSet& phi, int search_bound) {
  if (search_bound < 1) throw Error(ErrorKind::BadParams, "search bound must be at least 1");
  if (auto w = canonical_witness(phi, search_bound)) return w;
  TightSearch s(phi, search_bound);
  if (s.solve()) return s.witness();
  return std::nullopt;
}

std::optional<TightWitness> tight_unbounded(const SupportSet& phi) {
  TightSearch s(phi, 0);
  Matrix<Rational> eq;
  for (const auto& c : s.cons) {
    std::vector<Rational> row(s.nvars);
    for (int v : c) row[v] += 1;
    eq.push_back(std::move(row));
  }
  auto basis = nullspace(eq, s.nvars);
  // Injectivity is possible iff no difference x_a − x_b vanishes on the whole solution space.
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0, base = 0; f < 3; base += static_cast<int>(s.labels[f].size()), ++f)
    for (std::size_t a = 0; a < s.labels[f].size(); ++a)
      for (std::size_t b = a + 1; b < s.labels[f].size(); ++b) pairs.emplace_back(base + a, base + b);
  for (const auto& [a, b] : pairs) {
    bool separates = false;
    for (const auto& v : basis)
      if (v[a] != v[b]) separates = true;
    if (!separates) return std::nullopt;
  }
  std::mt19937_64 rng(12345);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> x(s.nvars);
    for (const auto& v : basis) {
      long c = static_cast<long>(rng() % (2 * (attempt / 10 + 3) + 1)) - (attempt / 10 + 3);
      for (int k = 0; k < s.nvars; ++k) x[k] += c * v[k];
    }
    bool ok = true;
    for (const auto& [a, b] : pairs)
      if (x[a] == x[b]) ok = false;
    if (!ok) continue;
    BigInt den = 1;
    for (const auto& q : x) den = lcm(den, BigInt(q.get_den()));
    for (int k = 0; k < s.nvars; ++k) {
      Rational scaled = x[k] * den;
      s.value[k] = scaled.get_num().get_si();
    }
    TightWitness w = s.witness();
    long bound = 0;
    for (const auto& v : s.value) bound = std::max(bound, std::labs(*v));
    w.bound = static_cast<int>(bound);
    if (validate_tight_witness(phi, w)) return w;
  }
  return std::nullopt;
}

ReconstructibilityResult is_reconstructible(const SupportSet& phi) {
  ReconstructibilityResult res;
  if (phi.empty()) return res;
  auto kernel = nullspace(marginal_matrix(phi), phi.size());
  if (kernel.empty()) return res;
  res.reconstructible = false;
  std::vector<Rational> v = kernel.front();
  for (const auto& x : v)
    if (sgn(x) != 0) {
      if (sgn(x) < 0)
        for (auto& y : v) y = -y;
      break;
    }
  Rational maxabs = 0;
  for (const auto& x : v) maxabs = std::max(maxabs, Rational(abs(x)));
  const Rational u(1, phi.size());
  const Rational eps = u / maxabs;
  RationalDistribution p, q;
  std::size_t k = 0;
  for (const auto& t : phi) {
    p[t] = u;
    Rational w = u + eps * v[k++];
    if (sgn(w) != 0) q[t] = w;
  }
  res.counterexample = std::make_pair(std::move(p), std::move(q));
  return res;
}

bool validate_degeneration(const SupportSet& psi, const SupportSet& phi, const DegenerationWitness& w) {
  for (const auto& t : phi) {
    BigInt s = 0;
    for (int f = 0; f < 3; ++f) {
      auto it = w.fns[f].find(t[f]);
      if (it == w.fns[f].end()) return false;
      s += it->second;
    }
    if (psi.count(t) ? s != 0 : s < 1) return false;
  }
  return true;
}

namespace {

std::optional<DegenerationWitness> degeneration_lp(const SupportSet& zero, const SupportSet& positive,
                                                   const SupportSet& phi) {
  std::array<std::map<int, int>, 3> slot;
  int n = 0;
  for (int f = 0; f < 3; ++f)
    for (int l : labels_of(phi, f)) slot[f][l] = n++;
  auto row_of = [&](const Triple& t) {
    std::vector<Rational> row(n);
    for (int f = 0; f < 3; ++f) row[slot[f].at(t[f])] += 1;
    return row;
  };
  Matrix<Rational> a_eq, a_ge;
  std::vector<Rational> b_eq, b_ge;
  for (const auto& t : zero) {
    a_eq.push_back(row_of(t));
    b_eq.emplace_back(0);
  }
  for (const auto& t : positive) {
    a_ge.push_back(row_of(t));
    b_ge.emplace_back(1);
  }
  auto x = exact_feasible(a_eq, b_eq, a_ge, b_ge, n);
  if (!x) return std::nullopt;
  BigInt den = 1;
  for (const auto& q : *x) den = lcm(den, BigInt(q.get_den()));
  DegenerationWitness w;
  for (int f = 0; f < 3; ++f)
    for (const auto& [l, k] : slot[f]) {
      Rational scaled = (*x)[k] * den;
      w.fns[f][l] = scaled.get_num();
    }
  return w;
}

}  // namespace

std::optional<DegenerationWitness> is_combinatorial_degeneration(const SupportSet& psi, const SupportSet& phi) {
  for (const auto& t : psi)
    if (!phi.count(t)) throw Error(ErrorKind::NotSubset, "Psi is not a subset of Phi");
  SupportSet rest;
  for (const auto& t : phi)
    if (!psi.count(t)) rest.insert(t);
  return degeneration_lp(psi, rest, phi);
}

bool is_diagonal(const SupportSet& delta) {
  for (int f = 0; f < 3; ++f) {
    std::set<int> seen;
    for (const auto& t : delta)
      if (!seen.insert(t[f]).second) return false;
  }
  return true;
}

bool is_balanced(const SupportSet& delta, const std::vector<int>& i_labels, const std::vector<int>& j_labels,
                 const std::vector<int>& k_labels) {
  const std::array<const std::vector<int>*, 3> sets{&i_labels, &j_labels, &k_labels};
  for (int f = 0; f < 3; ++f) {
    if (sets[f]->empty()) return delta.empty();
    std::map<int, std::size_t> fiber;
    for (int l : *sets[f]) fiber[l] = 0;
    for (const auto& t : delta) {
      auto it = fiber.find(t[f]);
      if (it == fiber.end()) return false;
      ++it->second;
    }
    const std::size_t size = fiber.begin()->second;
    for (const auto& [l, c] : fiber)
      if (c != size) return false;
  }
  return true;
}

namespace {

struct DiagonalSearch {
  const SupportSet& phi;
  std::vector<Triple> items;
  std::vector<Triple> chosen;
  SupportSet best;
  bool have_best = false;

  explicit DiagonalSearch(const SupportSet& p) : phi(p), items(p.begin(), p.end()) {}

  bool compatible(const Triple& t) const {
    for (const auto& c : chosen)
      if (c[0] == t[0] || c[1] == t[1] || c[2] == t[2]) return false;
    return true;
  }

  // "= 0 on chosen, ≥ 1 on triples that can no longer join".
  bool feasible(std::size_t next) const {
    SupportSet zero(chosen.begin(), chosen.end()), positive;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (zero.count(items[k])) continue;
      if (k < next || !compatible(items[k])) positive.insert(items[k]);
    }
    return degeneration_lp(zero, positive, phi).has_value();
  }

  void dfs(std::size_t next) {
    std::size_t open = 0;
    for (std::size_t k = next; k < items.size(); ++k)
      if (compatible(items[k])) ++open;
    if (have_best && chosen.size() + open <= best.size()) return;
    if (!feasible(next)) return;
    if (next == items.size()) {
      best = SupportSet(chosen.begin(), chosen.end());
      have_best = true;
      return;
    }
    if (compatible(items[next])) {
      chosen.push_back(items[next]);
      dfs(next + 1);
      chosen.pop_back();
    }
    dfs(next + 1);
  }
};

}  // namespace

SupportSet max_degeneration_diagonal(const SupportSet& phi, std::size_t size_budget) {
  if (phi.size() > size_budget)
    throw Error(ErrorKind::SizeLimit, "support too large for exact diagonal search", static_cast<long>(phi.size()));
  DiagonalSearch s(phi);
  s.dfs(0);
  return s.best;
}

double multinomial_entropy_gap(const std::vector<long>& q, long n) {
  long total = std::accumulate(q.begin(), q.end(), 0L);
  if (total != n) throw Error(ErrorKind::BadParams, "composition does not sum to N");
  BigInt num, den = 1, f;
  mpz_fac_ui(num.get_mpz_t(), n);
  for (long k : q) {
    mpz_fac_ui(f.get_mpz_t(), k);
    den *= f;
  }
  BigInt mult = num / den;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, mult.get_mpz_t());
  double log_mult = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  double h = 0;
  for (long k : q)
    if (k > 0) {
      double p = static_cast<double>(k) / n;
      h -= p * std::log(p);
    }
  return std::fabs(log_mult / n - h);
}

nlohmann::json blocking_to_json(const Blocking& d) {
  nlohmann::json j;
  for (int f = 0; f < 3; ++f) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : d.factors[f]) {
      nlohmann::json e = {g.label, g.indices};
      if (!g.tag.empty()) e.push_back(g.tag);
      groups.push_back(std::move(e));
    }
    j[kFactorNames[f]] = std::move(groups);
  }
  return j;
}

Blocking blocking_from_json(const nlohmann::json& j) {
  Blocking d;
  try {
    for (int f = 0; f < 3; ++f)
      for (const auto& e : j.at(kFactorNames[f])) {
        BlockGroup g;
        g.label = e.at(0).get<int>();
        g.indices = e.at(1).get<std::vector<int>>();
        if (e.size() > 2) g.tag = e.at(2).get<std::vector<int>>();
        d.factors[f].push_back(std::move(g));
      }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("blocking JSON: ") + ex.what());
  }
  return d;
}

nlohmann::json support_to_json(const SupportSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : s) out.push_back(t);
  return out;
}

SupportSet support_from_json(const nlohmann::json& j) {
  SupportSet s;
  try {
    for (const auto& t : j) s.insert(t.get<Triple>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("support JSON: ") + ex.what());
  }
  return s;
}

}  // namespace omegaforge
