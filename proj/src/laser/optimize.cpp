#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "omegaforge/laser/laser.hpp"
#include "omegaforge/parallel.hpp"

namespace omegaforge {

namespace {

struct Model {
  std::vector<Triple> triples;
  std::vector<std::array<int, 3>> lab;  // label position per factor
  std::array<int, 3> nlab{};
  std::vector<double> alpha, beta;
  std::array<std::array<int, 3>, 3> counts{};  // counts[L][f] = #{σ : σ(L) = f}
  int nforms = 1;                               // distinct entropy forms in the min
  bool restricted = false;
};

Model make_model(const LaserProblem& prob, PenaltyMode mode) {
  Model m;
  m.triples.assign(prob.support.begin(), prob.support.end());
  std::array<std::vector<int>, 3> labels;
  for (int f = 0; f < 3; ++f) {
    labels[f] = labels_of(prob.support, f);
    m.nlab[f] = static_cast<int>(labels[f].size());
  }
  for (const auto& t : m.triples) {
    std::array<int, 3> l{};
    for (int f = 0; f < 3; ++f) l[f] = static_cast<int>(std::lower_bound(labels[f].begin(), labels[f].end(), t[f]) - labels[f].begin());
    m.lab.push_back(l);
    auto it = prob.values.find(t);
    if (it == prob.values.end()) throw Error(ErrorKind::MissingValueBound, "no value bound for a support triple");
    m.alpha.push_back(it->second.alpha);
    m.beta.push_back(it->second.beta);
  }
  for (int l = 0; l < 3; ++l)
    for (const auto& sigma : group_elements(prob.group)) ++m.counts[l][sigma[l]];
  m.nforms = (m.counts[0] == m.counts[1] && m.counts[1] == m.counts[2]) ? 1 : 3;
  m.restricted = mode == PenaltyMode::MaxentRestricted && !is_reconstructible(prob.support).reconstructible;
  return m;
}

struct Eval {
  double value = 0;          // exact objective (true min over L)
  double smoothed = 0;       // softmin objective used for line search
  std::vector<double> grad;  // gradient of the smoothed objective in P
};

// mu = 0 means the exact min; only meaningful when nforms == 1.
Eval evaluate(const Model& m, const std::vector<double>& p, double omega, double mu, bool want_grad) {
  const std::size_t n = p.size();
  std::array<std::vector<double>, 3> marg;
  for (int f = 0; f < 3; ++f) marg[f].assign(m.nlab[f], 0.0);
  double linear = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (int f = 0; f < 3; ++f) marg[f][m.lab[k][f]] += p[k];
    linear += p[k] * (m.alpha[k] + m.beta[k] * omega);
  }
  std::array<double, 3> h{};
  for (int f = 0; f < 3; ++f)
    for (double q : marg[f])
      if (q > 0) h[f] -= q * std::log(q);
  std::array<double, 3> s{};
  for (int l = 0; l < m.nforms; ++l)
    for (int f = 0; f < 3; ++f) s[l] += m.counts[l][f] * h[f];

  Eval e;
  std::array<double, 3> w{1.0, 0.0, 0.0};
  double smin = s[0];
  for (int l = 1; l < m.nforms; ++l) smin = std::min(smin, s[l]);
  e.value = smin + linear;
  if (m.nforms == 1 || mu <= 0) {
    e.smoothed = e.value;
    if (m.nforms > 1) {
      w = {0.0, 0.0, 0.0};
      for (int l = 0; l < m.nforms; ++l)
        if (s[l] == smin) {
          w[l] = 1.0;
          break;
        }
    }
  } else {
    double z = 0;
    for (int l = 0; l < m.nforms; ++l) {
      w[l] = std::exp(-(s[l] - smin) / mu);
      z += w[l];
    }
    for (int l = 0; l < m.nforms; ++l) w[l] /= z;
    e.smoothed = smin - mu * std::log(z) + linear;
  }
  if (!want_grad) return e;

  std::array<double, 3> coef{};
  for (int l = 0; l < m.nforms; ++l)
    for (int f = 0; f < 3; ++f) coef[f] += w[l] * m.counts[l][f];
  std::array<std::vector<double>, 3> dlog;
  for (int f = 0; f < 3; ++f) {
    dlog[f].resize(m.nlab[f]);
    for (int l = 0; l < m.nlab[f]; ++l) dlog[f][l] = -std::log(std::max(marg[f][l], 1e-300)) - 1.0;
  }
  e.grad.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double g = m.alpha[k] + m.beta[k] * omega;
    for (int f = 0; f < 3; ++f) g += coef[f] * dlog[f][m.lab[k][f]];
    e.grad[k] = g;
  }
  return e;
}

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(const std::vector<double>& v) {
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0, theta = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    css += u[k];
    double t = (css - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0) theta = t;
  }
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = std::max(v[k] - theta, 0.0);
  double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& x : out) x /= total;
  return out;
}

// Projected-gradient ascent with Armijo backtracking.
long ascend_simplex(const Model& m, std::vector<double>& p, double omega, double mu, int max_iter) {
  Eval cur = evaluate(m, p, omega, mu, true);
  double step = 1.0;
  int stall = 0;
  long it = 0;
  for (; it < max_iter && stall < 5; ++it) {
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      std::vector<double> q(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[k] + step * cur.grad[k];
      q = project_simplex(q);
      double slope = 0, dist = 0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        slope += cur.grad[k] * (q[k] - p[k]);
        dist = std::max(dist, std::fabs(q[k] - p[k]));
      }
      if (dist < 1e-17) break;
      Eval next = evaluate(m, q, omega, mu, true);
      if (next.smoothed >= cur.smoothed + 1e-4 * slope) {
        stall = next.smoothed - cur.smoothed < 1e-15 ? stall + 1 : 0;
        p = std::move(q);
        cur = std::move(next);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    step = std::min(step * 2.0, 1e3);
  }
  return it;
}

void polish_simplex(const Model& m, std::vector<double>& p, double omega) {
  const double delta = 1e-3;
  double best = evaluate(m, p, omega, 0, false).value;
  for (int pass = 0; pass < 1000; ++pass) {
    bool improved = false;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (a == b || p[b] < delta) continue;
        std::vector<double> q = p;
        q[a] += delta;
        q[b] -= delta;
        double v = evaluate(m, q, omega, 0, false).value;
        if (v > best + 1e-15) {
          best = v;
          p = std::move(q);
          improved = true;
        }
      }
    if (!improved) break;
  }
}

std::vector<double> theta_to_p(const Model& m, const std::vector<double>& theta) {
  std::array<int, 3> off{0, m.nlab[0], m.nlab[0] + m.nlab[1]};
  std::vector<double> e(m.triples.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    e[k] = theta[off[0] + m.lab[k][0]] + theta[off[1] + m.lab[k][1]] + theta[off[2] + m.lab[k][2]];
  double mx = *std::max_element(e.begin(), e.end());
  double z = 0;
  for (double& x : e) {
    x = std::exp(x - mx);
    z += x;
  }
  for (double& x : e) x /= z;
  return e;
}

struct ThetaEval {
  double smoothed = 0;
  std::vector<double> grad;
};

// Gradient in θ is Cov_P(φ, ∂F/∂P) for the sufficient statistics φ.
ThetaEval evaluate_theta(const Model& m, const std::vector<double>& theta, double omega, double mu) {
  std::vector<double> p = theta_to_p(m, theta);
  Eval e = evaluate(m, p, omega, mu, true);
  double mean = 0;
  for (std::size_t k = 0; k < p.size(); ++k) mean += p[k] * e.grad[k];
  std::array<int, 3> off{0, m.nlab[0], m.nlab[0] + m.nlab[1]};
  ThetaEval out{e.smoothed, std::vector<double>(theta.size(), 0.0)};
  for (std::size_t k = 0; k < p.size(); ++k) {
    double c = p[k] * (e.grad[k] - mean);
    for (int f = 0; f < 3; ++f) out.grad[off[f] + m.lab[k][f]] += c;
  }
  return out;
}

// BFGS ascent on θ with backtracking.
long ascend_theta(const Model& m, std::vector<double>& theta, double omega, double mu, int max_iter) {
  const std::size_t d = theta.size();
  std::vector<double> hinv(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) hinv[i * d + i] = 1.0;
  ThetaEval cur = evaluate_theta(m, theta, omega, mu);
  int stall = 0;
  long it = 0;
  for (; it < max_iter && stall < 5; ++it) {
    std::vector<double> dir(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dir[i] += hinv[i * d + j] * cur.grad[j];
    double slope = 0;
    for (std::size_t i = 0; i < d; ++i) slope += dir[i] * cur.grad[i];
    if (slope <= 0) {
      std::fill(hinv.begin(), hinv.end(), 0.0);
      for (std::size_t i = 0; i < d; ++i) hinv[i * d + i] = 1.0;
      dir = cur.grad;
      slope = 0;
      for (double g : cur.grad) slope += g * g;
    }
    if (slope < 1e-30) break;
    double step = 1.0;
    bool accepted = false;
    std::vector<double> next_theta(d);
    ThetaEval next;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < d; ++i) next_theta[i] = theta[i] + step * dir[i];
      next = evaluate_theta(m, next_theta, omega, mu);
      if (next.smoothed >= cur.smoothed + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    std::vector<double> s(d), y(d);
    for (std::size_t i = 0; i < d; ++i) {
      s[i] = next_theta[i] - theta[i];
      y[i] = cur.grad[i] - next.grad[i];  // gradient difference of −F
    }
    double sy = 0;
    for (std::size_t i = 0; i < d; ++i) sy += s[i] * y[i];
    if (sy > 1e-18) {
      std::vector<double> hy(d, 0.0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) hy[i] += hinv[i * d + j] * y[j];
      double yhy = 0;
      for (std::size_t i = 0; i < d; ++i) yhy += y[i] * hy[i];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          hinv[i * d + j] += ((sy + yhy) * s[i] * s[j]) / (sy * sy) - (hy[i] * s[j] + s[i] * hy[j]) / sy;
    }
    stall = next.smoothed - cur.smoothed < 1e-15 ? stall + 1 : 0;
    theta = std::move(next_theta);
    cur = std::move(next);
  }
  return it;
}

const double kMuSchedule[] = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 0.0};

struct StartResult {
  std::vector<double> p;
  double value = -std::numeric_limits<double>::infinity();
  long iterations = 0;
};

StartResult run_start(const Model& m, double omega, int start) {
  const std::size_t n = m.triples.size();
  StartResult r;
  std::mt19937_64 rng(static_cast<std::uint64_t>(start) * 0x9E3779B97F4A7C15ULL + 1);
  if (m.restricted) {
    const std::size_t d = m.nlab[0] + m.nlab[1] + m.nlab[2];
    std::vector<double> theta(d, 0.0);
    std::array<int, 3> off{0, m.nlab[0], m.nlab[0] + m.nlab[1]};
    if (start >= 1 && static_cast<std::size_t>(start) <= n) {
      for (int f = 0; f < 3; ++f) theta[off[f] + m.lab[start - 1][f]] = 1.0;
    } else if (start > 0) {
      std::normal_distribution<double> normal(0.0, 1.0);
      for (double& x : theta) x = normal(rng);
    }
    for (double mu : kMuSchedule) {
      if (m.nforms == 1 && mu > 0) continue;
      r.iterations += ascend_theta(m, theta, omega, mu, 4000);
    }
    r.p = theta_to_p(m, theta);
  } else {
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    if (start >= 1 && static_cast<std::size_t>(start) <= n) {
      for (double& x : p) x *= 0.5;
      p[start - 1] += 0.5;
    } else if (start > 0) {
      std::exponential_distribution<double> expo(1.0);
      double total = 0;
      for (double& x : p) total += (x = expo(rng));
      for (double& x : p) x /= total;
    }
    for (double mu : kMuSchedule) {
      if (m.nforms == 1 && mu > 0) continue;
      r.iterations += ascend_simplex(m, p, omega, mu, 20000);
    }
    polish_simplex(m, p, omega);
    r.iterations += ascend_simplex(m, p, omega, m.nforms == 1 ? 0.0 : 1e-8, 20000);
    r.p = std::move(p);
  }
  r.value = evaluate(m, r.p, omega, 0, false).value;
  return r;
}

OptimizeResult reduce(const Model& m, std::vector<StartResult>& results) {
  OptimizeResult out;
  std::size_t best = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    out.iterations += results[s].iterations;
    if (results[s].value > results[best].value) best = s;
  }
  out.p.triples = m.triples;
  out.p.weights = std::move(results[best].p);
  out.value = results[best].value;
  out.best_start = static_cast<int>(best);
  return out;
}

OptimizeResult trivial_result(const Model& m, double omega) {
  OptimizeResult out;
  out.p.triples = m.triples;
  out.p.weights.assign(m.triples.size(), 1.0);
  out.value = evaluate(m, out.p.weights, omega, 0, false).value;
  return out;
}

}  // namespace

OptimizeResult optimize_distribution(const LaserProblem& prob, double omega, const OptimizeOptions& opts) {
  if (!opts.parallel) return optimize_distribution_serial(prob, omega, opts);
  Model m = make_model(prob, opts.mode);
  if (m.triples.empty()) throw Error(ErrorKind::NotADistribution, "empty support");
  if (m.triples.size() == 1) return trivial_result(m, omega);
  const int starts = std::max(1, opts.starts);
  std::vector<StartResult> results(starts);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
  for (int s = 0; s < starts; ++s) results[s] = run_start(m, omega, s);
  return reduce(m, results);
}

OptimizeResult optimize_distribution_serial(const LaserProblem& prob, double omega, OptimizeOptions opts) {
  Model m = make_model(prob, opts.mode);
  if (m.triples.empty()) throw Error(ErrorKind::NotADistribution, "empty support");
  if (m.triples.size() == 1) return trivial_result(m, omega);
  const int starts = std::max(1, opts.starts);
  std::vector<StartResult> results(starts);
  for (int s = 0; s < starts; ++s) results[s] = run_start(m, omega, s);
  return reduce(m, results);
}

}  // namespace omegaforge
