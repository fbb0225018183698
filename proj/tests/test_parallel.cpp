#include <gtest/gtest.h>

#include "omegaforge/cli/cli.hpp"

using namespace omegaforge;

namespace {

LaserProblem problem_for(const NamedTensorSpec& spec) {
  return build_laser_problem(spec, RunConfig{}, load_presets(default_presets_path())).problem;
}

}  // namespace

TEST(Parallel, OptimizeMatchesSerial) {
  for (const auto& spec : {hw_tensor(7), smoothable_tensor(4), strassen(5), a3_tensor()}) {
    LaserProblem p = problem_for(spec);
    for (double w : {2.2, 2.45}) {
      OptimizeResult a = optimize_distribution(p, w), b = optimize_distribution_serial(p, w);
      EXPECT_EQ(a.value, b.value) << spec.family;
      EXPECT_EQ(a.p.weights, b.p.weights) << spec.family;
      EXPECT_EQ(a.best_start, b.best_start) << spec.family;
    }
  }
}

TEST(Parallel, NestedMatchesSerial) {
  NamedTensorSpec s = hw_tensor(7);
  Tensor corner = block_component(s.tensor, s.blocking, {2, 0, 0});
  ValueBound a = nested_value_bound(corner, singleton_blocking(corner.dims()), Group::Cyclic3);
  ValueBound b = nested_value_bound_serial(corner, singleton_blocking(corner.dims()), Group::Cyclic3);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.beta, b.beta);
}

TEST(Parallel, ThreadCountIndependent) {
  LaserProblem p = problem_for(hw_tensor(3));
  OptimizeResult a = optimize_distribution(p, 2.4);
  setenv("OMEGAFORGE_THREADS", "1", 1);
  OptimizeResult b = optimize_distribution(p, 2.4);
  unsetenv("OMEGAFORGE_THREADS");
  EXPECT_EQ(a.value, b.value);
}
