#include <benchmark/benchmark.h>

#include "omegaforge/certificates/certificates.hpp"
#include "omegaforge/cli/cli.hpp"

using namespace omegaforge;

namespace {

LaserProblem hw_problem() {
  RunConfig cfg;
  return build_laser_problem(hw_tensor(7), cfg, load_presets(default_presets_path())).problem;
}

void BM_OptimizeSerial(benchmark::State& state) {
  LaserProblem prob = hw_problem();
  for (auto _ : state) benchmark::DoNotOptimize(optimize_distribution_serial(prob, 2.45).value);
}

void BM_OptimizeParallel(benchmark::State& state) {
  LaserProblem prob = hw_problem();
  for (auto _ : state) benchmark::DoNotOptimize(optimize_distribution(prob, 2.45).value);
}

void BM_NestedSerial(benchmark::State& state) {
  NamedTensorSpec s = hw_tensor(7);
  Tensor corner = block_component(s.tensor, s.blocking, {0, 0, 2});
  for (auto _ : state) benchmark::DoNotOptimize(nested_value_bound_serial(corner, singleton_blocking(corner.dims()), Group::Cyclic3).alpha);
}

void BM_NestedParallel(benchmark::State& state) {
  NamedTensorSpec s = hw_tensor(7);
  Tensor corner = block_component(s.tensor, s.blocking, {0, 0, 2});
  for (auto _ : state) benchmark::DoNotOptimize(nested_value_bound(corner, singleton_blocking(corner.dims()), Group::Cyclic3).alpha);
}

std::vector<Certificate> fixtures() {
  std::vector<Certificate> certs{build_strassen_cert(5), build_waring_cert(1), build_a3_toric_cert()};
  for (int m = 1; m <= 5; ++m) certs.push_back(build_hw_span_cert(m));
  return certs;
}

void BM_VerifySerial(benchmark::State& state) {
  auto certs = fixtures();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_serial(certs).size());
}

void BM_VerifyParallel(benchmark::State& state) {
  auto certs = fixtures();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(certs).size());
}

}  // namespace

BENCHMARK(BM_OptimizeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NestedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NestedParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
