#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "shapeparts/decompose.hpp"
#include "shapeparts/legacy.hpp"
#include "shapeparts/linsys.hpp"
#include "shapeparts/saliency.hpp"

using namespace shapeparts;

namespace {

/// Disk with four rectangular arms, scaled to a size x size raster.
BinaryMask cross_disk(int size) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(size) * size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const double x = (c + 0.5) / size - 0.5;
      const double y = (r + 0.5) / size - 0.5;
      const bool disk = x * x + y * y < 0.07;
      const bool arm = (std::abs(x) < 0.06 && std::abs(y) < 0.44) || (std::abs(y) < 0.06 && std::abs(x) < 0.44);
      cells[static_cast<std::size_t>(r) * size + c] = disk || arm;
    }
  }
  return BinaryMask(size, size, std::move(cells));
}

void BM_Distance(benchmark::State& state) {
  const auto d = build_domain(cross_disk(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(distance_transform(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d->omega_size()));
}

void BM_SolveCG(benchmark::State& state) {
  const auto d = build_domain(cross_disk(static_cast<int>(state.range(0))));
  const auto rhs = distance_transform(d).field();
  std::size_t iterations = 0;
  for (auto _ : state) {
    auto r = solve_cg({}, rhs);
    iterations = r.report.iterations;
    benchmark::DoNotOptimize(r);
  }
  state.counters["cg_iterations"] = static_cast<double>(iterations);
}

void BM_Decompose(benchmark::State& state) {
  const auto mask = cross_disk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_shape(mask));
}

void BM_MergeTree(benchmark::State& state) {
  const auto r = compute_omega(cross_disk(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_merge_tree(r.omega, r.negative));
}

void BM_TspField(benchmark::State& state) {
  const auto d = build_domain(cross_disk(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(compute_legacy_field(d, {LegacyKind::TspV, 1.0 / 64}));
}

}  // namespace

BENCHMARK(BM_Distance)->Arg(60)->Arg(220)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SolveCG)->Arg(60)->Arg(220)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->Arg(60)->Arg(220)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MergeTree)->Arg(60)->Arg(220)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TspField)->Arg(60)->Arg(220)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
