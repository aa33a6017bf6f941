#include <benchmark/benchmark.h>

#include <random>

#include "qrohf/pipeline.hpp"
#include "support.hpp"

namespace {

using namespace qrohf;

const Session& fixture() {
  static const Session session = testsupport::load_fixture("equipment_panel.json");
  return session;
}

void BM_ConsistencyIndex(benchmark::State& state) {
  const Session& session = fixture();
  const Rung q(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(consistency_index(session.panel.matrices[0], q));
  }
}
BENCHMARK(BM_ConsistencyIndex);

void BM_Aggregate(benchmark::State& state) {
  const Session& session = fixture();
  const Rung q(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate(session.panel, q));
  }
}
BENCHMARK(BM_Aggregate);

void BM_Repair(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Rung q(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Qrohfpr a = testsupport::random_relation(rng, n, 2, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(repair(a, q, 0.05));
  }
}
BENCHMARK(BM_Repair)->Arg(3)->Arg(4)->Arg(5);

void BM_DeriveWeights(benchmark::State& state) {
  const Session& session = fixture();
  const Rung q(3);
  const Qrohfpr group = aggregate(session.panel, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_weights(group, q));
  }
}
BENCHMARK(BM_DeriveWeights);

void BM_Pipeline(benchmark::State& state) {
  const Session& session = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(session.panel, session.config));
  }
}
BENCHMARK(BM_Pipeline);

}  // namespace

BENCHMARK_MAIN();
