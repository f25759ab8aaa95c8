#include <benchmark/benchmark.h>

#include "bergmod/angle.hpp"
#include "bergmod/ball_geometry.hpp"
#include "bergmod/carleson.hpp"
#include "bergmod/kernel_span.hpp"

using namespace bergmod;

namespace {

LinearVariety line(double theta) {
  CMatrix b(2, 1);
  b << std::cos(theta), std::sin(theta);
  return LinearVariety(b);
}

SamplePlan plan(std::size_t m, std::uint64_t seed) {
  SamplePlan p;
  p.count = m;
  p.rho_max = 0.95;
  p.seed = seed;
  return p;
}

void BM_MoebiusApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const MoebiusMap phi(sample_ball_uniform(n, rng));
  std::vector<Point> ws;
  for (int k = 0; k < 256; ++k) ws.push_back(sample_ball_uniform(n, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(ws[i++ & 255]));
  }
}
BENCHMARK(BM_MoebiusApply)->Arg(2)->Arg(3)->Arg(8);

void BM_PseudoDistance(benchmark::State& state) {
  Rng rng(2);
  const Point z = sample_ball_uniform(3, rng), w = sample_ball_uniform(3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_distance(z, w));
}
BENCHMARK(BM_PseudoDistance);

void BM_SampleAndBuildSpan(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto span = build_span(sample_variety(line(0.3), plan(m, 3)));
    benchmark::DoNotOptimize(span.rank());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleAndBuildSpan)->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ModuleAngle(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto s1 = build_span(sample_variety(line(0.0), plan(m, 1)));
  const auto s2 = build_span(sample_variety(line(0.7), plan(m, 2)));
  const auto s3 = build_span({Point::Zero(2)});
  for (auto _ : state) benchmark::DoNotOptimize(module_angle_sampled(s1, s2, &s3).norm_121);
}
BENCHMARK(BM_ModuleAngle)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CarlesonKernelSup(benchmark::State& state) {
  const auto nu = lebesgue_measure(1, PolarGrid{static_cast<int>(state.range(0)), 4 * static_cast<int>(state.range(0))});
  const auto grid = default_zgrid(1);
  for (auto _ : state) benchmark::DoNotOptimize(carleson_kernel_sup(nu, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(nu.size() * grid.size()));
}
BENCHMARK(BM_CarlesonKernelSup)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
