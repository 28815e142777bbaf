#include <map>

#include <benchmark/benchmark.h>

#include "fmodel/debranges.hpp"
#include "fmodel/geometry.hpp"
#include "fmodel/grids.hpp"
#include "fmodel/model.hpp"
#include "fmodel/operator_io.hpp"

using namespace fmodel;

namespace {

const ModelContext& context(Index dim) {
  static std::map<Index, ModelContext> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) {
    const auto t = fixtures::generate(FixtureKind::scaled_unitary, dim, 42, 0.9);
    it = cache.emplace(dim, decomposition::make_context(Contraction::validate(t), 1.0)).first;
  }
  return it->second;
}

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(1) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void BM_Theorem35Scan(benchmark::State& state) {
  const auto& ctx = context(state.range(0));
  const ExecPolicy p = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::theorem35_scan(ctx, 64, p));
}

void BM_Condition3Scan(benchmark::State& state) {
  const auto& ctx = context(state.range(0));
  const auto e = debranges::select_beta(ctx);
  const ExecPolicy p = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(debranges::condition3_scan(e, 8, 16, p));
}

void BM_ProjectorSweep(benchmark::State& state) {
  const auto& ctx = context(state.range(0));
  const auto pts = grids::disc_grid(8, 16);
  const ExecPolicy p = policy_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_over(pts.size(), p, [&](std::size_t i) {
      return model::intertwine_residual(ctx, decomposition::projector_py(ctx, pts[i]));
    }));
  }
}

}  // namespace

// second argument: 0 serial reference, 1 OpenMP
BENCHMARK(BM_Theorem35Scan)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Condition3Scan)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectorSweep)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
