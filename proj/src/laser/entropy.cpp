#include <algorithm>
#include <cmath>

#include "omegaforge/laser/laser.hpp"

namespace omegaforge {

std::string to_string(PenaltyMode m) { return m == PenaltyMode::Off ? "off" : "maxent-restricted"; }

PenaltyMode parse_penalty_mode(const std::string& name) {
  if (name == "maxent-restricted") return PenaltyMode::MaxentRestricted;
  if (name == "off") return PenaltyMode::Off;
  throw Error(ErrorKind::ParseError, "unknown penalty mode: " + name);
}

Distribution Distribution::uniform(const SupportSet& s) {
  Distribution d;
  d.triples.assign(s.begin(), s.end());
  d.weights.assign(s.size(), s.empty() ? 0.0 : 1.0 / static_cast<double>(s.size()));
  return d;
}

Distribution Distribution::from_map(const std::map<Triple, double>& w) {
  Distribution d;
  for (const auto& [t, p] : w) {
    d.triples.push_back(t);
    d.weights.push_back(p);
  }
  return d;
}

double Distribution::at(const Triple& t) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  return it != triples.end() && *it == t ? weights[it - triples.begin()] : 0.0;
}

Marginals Distribution::marginals() const {
  Marginals m;
  for (std::size_t k = 0; k < triples.size(); ++k)
    for (int f = 0; f < 3; ++f) m[f][triples[k][f]] += weights[k];
  return m;
}

RationalDistribution Distribution::snapshot() const {
  RationalDistribution out;
  const long den = 1000000000000L;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    Rational q(static_cast<long>(std::llround(weights[k] * static_cast<double>(den))), den);
    q.canonicalize();
    out[triples[k]] = q;
  }
  return out;
}

double entropy(const std::vector<double>& weights) {
  double total = 0, h = 0;
  for (double p : weights) {
    if (p < 0 || !std::isfinite(p)) throw Error(ErrorKind::NotADistribution, "negative or non-finite weight");
    total += p;
    if (p > 0) h -= p * std::log(p);
  }
  if (std::fabs(total - 1) > 1e-9) throw Error(ErrorKind::NotADistribution, "weights do not sum to 1");
  return h;
}

double entropy(const std::map<int, double>& weights) {
  std::vector<double> w;
  for (const auto& [k, p] : weights) w.push_back(p);
  return entropy(w);
}

Distribution max_entropy_with_marginals(const SupportSet& phi, const Marginals& marginals) {
  Distribution q = Distribution::uniform(phi);
  const std::size_t n = q.triples.size();
  if (n == 0) throw Error(ErrorKind::Infeasible, "empty support");
  auto target = [&](int f, int label) {
    auto it = marginals[f].find(label);
    return it == marginals[f].end() ? 0.0 : it->second;
  };
  for (int f = 0; f < 3; ++f)
    for (const auto& [label, mass] : marginals[f])
      if (mass > 1e-15 && std::none_of(q.triples.begin(), q.triples.end(),
                                       [&](const Triple& t) { return t[f] == label; }))
        throw Error(ErrorKind::Infeasible, "marginal mass on a label absent from the support");

  for (int iter = 0; iter < 200000; ++iter) {
    for (int f = 0; f < 3; ++f) {
      Marginals cur = q.marginals();
      for (std::size_t k = 0; k < n; ++k) {
        double c = cur[f][q.triples[k][f]];
        double tg = target(f, q.triples[k][f]);
        q.weights[k] = c > 0 ? q.weights[k] * tg / c : 0.0;
      }
    }
    Marginals cur = q.marginals();
    double err = 0;
    for (int f = 0; f < 3; ++f) {
      for (const auto& [label, mass] : cur[f]) err = std::max(err, std::fabs(mass - target(f, label)));
      for (const auto& [label, mass] : marginals[f]) err = std::max(err, std::fabs(mass - cur[f][label]));
    }
    if (err <= 1e-10) return q;
  }
  throw Error(ErrorKind::Infeasible, "iterative proportional fitting did not converge");
}

double gamma_penalty(const SupportSet& phi, const Distribution& p) {
  Distribution q = max_entropy_with_marginals(phi, p.marginals());
  return std::max(0.0, entropy(q.weights) - entropy(p.weights));
}

namespace {

double marginal_entropy(const std::map<int, double>& m) {
  double h = 0;
  for (const auto& [label, p] : m)
    if (p > 0) h -= p * std::log(p);
  return h;
}

}  // namespace

double symmetrized_entropy(const LaserProblem& prob, const Distribution& p) {
  Marginals m = p.marginals();
  std::array<double, 3> h{};
  for (int f = 0; f < 3; ++f) h[f] = marginal_entropy(m[f]);
  double best = 0;
  for (int l = 0; l < 3; ++l) {
    double s = 0;
    for (const auto& sigma : group_elements(prob.group)) s += h[sigma[l]];
    if (l == 0 || s < best) best = s;
  }
  return best;
}

double laser_rhs(const LaserProblem& prob, const Distribution& p, double omega, PenaltyMode mode) {
  double total = 0;
  for (std::size_t k = 0; k < p.triples.size(); ++k) {
    if (!prob.support.count(p.triples[k]))
      throw Error(ErrorKind::NotADistribution, "distribution charges a triple outside the support");
    auto it = prob.values.find(p.triples[k]);
    if (it == prob.values.end())
      throw Error(ErrorKind::MissingValueBound, "no value bound for a support triple");
    total += p.weights[k] * it->second.at(omega);
  }
  entropy(p.weights);
  double rhs = symmetrized_entropy(prob, p) + total;
  if (mode == PenaltyMode::MaxentRestricted && !is_reconstructible(prob.support).reconstructible)
    rhs -= gamma_penalty(prob.support, p);
  return rhs;
}

}  // namespace omegaforge
