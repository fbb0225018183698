#include <cmath>

#include "omegaforge/laser/laser.hpp"

namespace omegaforge {

ValueBound matmult_value(int a, int b, int c, Group g) {
  return {0.0, static_cast<double>(group_order(g)) / 3.0 * std::log(static_cast<double>(a) * b * c)};
}

OmegaBoundReport solve_omega(const LaserProblem& prob, const SolveOptions& opts) {
  bool any_beta = false;
  for (const auto& t : prob.support) {
    auto it = prob.values.find(t);
    if (it == prob.values.end()) throw Error(ErrorKind::MissingValueBound, "no value bound for a support triple");
    if (it->second.beta > 0) any_beta = true;
  }
  if (!any_beta) throw Error(ErrorKind::Unbounded, "every value bound has beta = 0");
  if (prob.brank_budget < 1) throw Error(ErrorKind::BadParams, "border-rank budget must be positive");

  OmegaBoundReport rep;
  rep.mode = opts.optimize.mode;
  rep.group = prob.group;
  rep.reconstructible = is_reconstructible(prob.support).reconstructible;
  rep.budget_log = static_cast<double>(group_order(prob.group)) * std::log(static_cast<double>(prob.brank_budget));

  auto f = [&](double omega, OptimizeResult* keep) {
    OptimizeResult r = optimize_distribution(prob, omega, opts.optimize);
    rep.iterations += r.iterations;
    double v = r.value - rep.budget_log;
    if (keep) *keep = std::move(r);
    return v;
  };

  OptimizeResult at_hi;
  double lo = 2.0, hi = 3.0;
  double f_hi = f(hi, &at_hi);
  if (f_hi < 0) {
    rep.status = "no_root";
  } else {
    OptimizeResult at_lo;
    double f_lo = f(lo, &at_lo);
    if (f_lo >= 0) {
      rep.status = "clamped_at_2";
      hi = lo;
      f_hi = f_lo;
      at_hi = std::move(at_lo);
    } else {
      while (hi - lo > opts.omega_tol / 8) {
        double mid = 0.5 * (lo + hi);
        OptimizeResult r;
        double v = f(mid, &r);
        if (v >= 0) {
          hi = mid;
          f_hi = v;
          at_hi = std::move(r);
        } else {
          lo = mid;
        }
      }
    }
  }
  rep.omega_star = hi;
  rep.residual = std::fabs(f_hi);
  rep.p = at_hi.p;
  Marginals m = rep.p.marginals();
  for (int k = 0; k < 3; ++k) rep.marginal_entropies[k] = entropy(m[k]);
  if (!rep.reconstructible) rep.penalty = gamma_penalty(prob.support, rep.p);
  return rep;
}

double schonhage_solve(const std::vector<MatmultTerm>& terms, long r, double tol) {
  auto f = [&](double omega) {
    double s = 0;
    for (const auto& t : terms)
      s += static_cast<double>(t.multiplicity) * std::pow(static_cast<double>(t.a) * t.b * t.c, omega / 3.0);
    return s - static_cast<double>(r);
  };
  double lo = 2.0, hi = 3.0;
  double flo = f(lo), fhi = f(hi);
  if (flo == fhi) throw Error(ErrorKind::NoRoot, "sum does not depend on omega");
  if (flo > 0 || fhi < 0) throw Error(ErrorKind::NoRoot, "border rank outside the attainable range on [2,3]");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (f(mid) >= 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace omegaforge
