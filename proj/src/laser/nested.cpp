#include <omp.h>

#include <cmath>

#include "omegaforge/laser/laser.hpp"
#include "omegaforge/parallel.hpp"

namespace omegaforge {

std::optional<std::array<int, 3>> recognize_matmult(const Tensor& t) {
  Tensor core = drop_zero_slices(t);
  if (core.empty()) return std::nullopt;
  const long p = core.dim(0), q = core.dim(1), r = core.dim(2);
  // dims (ab, bc, ca) give a² = pr/q.
  if ((p * r) % q != 0) return std::nullopt;
  const long a2 = p * r / q;
  long a = std::lround(std::sqrt(static_cast<double>(a2)));
  if (a * a != a2 || a == 0 || p % a != 0 || r % a != 0) return std::nullopt;
  const long b = p / a, c = r / a;
  if (b * c != q || static_cast<long>(core.size()) != a * b * c) return std::nullopt;
  for (const auto& [idx, v] : core.entries())
    if (!v.is_one()) return std::nullopt;
  Tensor m = matmult_tensor(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
  if (!equal_up_to_permutation(core, m)) return std::nullopt;
  return std::array<int, 3>{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
}

namespace {

constexpr int kGridPoints = 11;  // ω = 2.0, 2.1, …, 3.0

LaserProblem inner_problem(const Tensor& block, const Blocking& inner, Group g, int search_bound) {
  LaserProblem prob;
  prob.support = support(block, inner);
  if (prob.support.empty()) throw Error(ErrorKind::BadParams, "empty block");
  if (!is_tight(prob.support, search_bound)) throw Error(ErrorKind::NotTight, "inner support is not tight");
  prob.group = g;
  for (const auto& t : prob.support) {
    auto abc = recognize_matmult(block_component(block, inner, t));
    if (!abc) throw Error(ErrorKind::MissingValueBound, "inner block is not a matrix multiplication tensor");
    prob.values[t] = matmult_value((*abc)[0], (*abc)[1], (*abc)[2], g);
  }
  return prob;
}

// Affine bound valid for every ω, from a fixed distribution.
ValueBound tangent_line(const LaserProblem& prob, const Distribution& p, PenaltyMode mode) {
  ValueBound line{symmetrized_entropy(prob, p), 0.0};
  for (std::size_t k = 0; k < p.triples.size(); ++k) {
    const ValueBound& v = prob.values.at(p.triples[k]);
    line.alpha += p.weights[k] * v.alpha;
    line.beta += p.weights[k] * v.beta;
  }
  if (mode == PenaltyMode::MaxentRestricted && !is_reconstructible(prob.support).reconstructible)
    line.alpha -= gamma_penalty(prob.support, p);
  return line;
}

ValueBound pick(const std::vector<ValueBound>& lines) {
  ValueBound best = lines.front();
  for (const auto& l : lines)
    if (l.at(2.5) > best.at(2.5)) best = l;
  return best;
}

}  // namespace

ValueBound nested_value_bound(const Tensor& block, const Blocking& inner, Group g, const NestedOptions& opts) {
  if (!opts.parallel) return nested_value_bound_serial(block, inner, g, opts);
  if (auto abc = recognize_matmult(block)) return matmult_value((*abc)[0], (*abc)[1], (*abc)[2], g);
  LaserProblem prob = inner_problem(block, inner, g, opts.tight_search_bound);
  OptimizeOptions inner_opts = opts.optimize;
  inner_opts.parallel = false;
  std::vector<ValueBound> lines(kGridPoints);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
  for (int k = 0; k < kGridPoints; ++k) {
    OptimizeResult r = optimize_distribution_serial(prob, 2.0 + 0.1 * k, inner_opts);
    lines[k] = tangent_line(prob, r.p, inner_opts.mode);
  }
  return pick(lines);
}

ValueBound nested_value_bound_serial(const Tensor& block, const Blocking& inner, Group g, NestedOptions opts) {
  if (auto abc = recognize_matmult(block)) return matmult_value((*abc)[0], (*abc)[1], (*abc)[2], g);
  LaserProblem prob = inner_problem(block, inner, g, opts.tight_search_bound);
  OptimizeOptions inner_opts = opts.optimize;
  inner_opts.parallel = false;
  std::vector<ValueBound> lines(kGridPoints);
  for (int k = 0; k < kGridPoints; ++k) {
    OptimizeResult r = optimize_distribution_serial(prob, 2.0 + 0.1 * k, inner_opts);
    lines[k] = tangent_line(prob, r.p, inner_opts.mode);
  }
  return pick(lines);
}

}  // namespace omegaforge
