#include <benchmark/benchmark.h>

#include "bipsym/census.hpp"
#include "bipsym/classifier.hpp"
#include "bipsym/json_io.hpp"
#include "bipsym/realize.hpp"
#include "bipsym/verifier.hpp"

namespace {

using namespace bipsym;

void BM_ClassifyAll(benchmark::State& state) {
  const BipartiteShape shape(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::uint64_t hits = 0;
    for (const auto& a : enumerate_automorphisms(shape)) {
      hits += classify_aut(a).op_realizable() ? 1 : 0;
    }
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(automorphism_count(shape)));
}
BENCHMARK(BM_ClassifyAll)->Args({3, 3})->Args({4, 4})->Args({5, 5});

void BM_Census(benchmark::State& state) {
  const BipartiteShape shape(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  CensusOptions o;
  o.threads = 1;
  o.realize_all = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(census(shape, o));
}
BENCHMARK(BM_Census)->Args({4, 0})->Args({4, 1})->Args({5, 0})->Unit(benchmark::kMillisecond);

void BM_RealizeVerify(benchmark::State& state, const char* perm, Orientation o) {
  const auto aut = parse_cycles({4, 4}, perm);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto r = realize(aut, o, seed++);
    benchmark::DoNotOptimize(verify(aut, r.isometry, r.embedding).overall());
  }
}
BENCHMARK_CAPTURE(BM_RealizeVerify, rotation, "(v1 v2 v3 v4)(w1 w2 w3 w4)",
                  Orientation::Preserving);
BENCHMARK_CAPTURE(BM_RealizeVerify, improper, "(v1 w1)(v2 w2)(v3 w3 v4 w4)",
                  Orientation::Reversing);

void BM_CanonicalDump(benchmark::State& state) {
  const Json j = to_json(census({4, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_dump(j));
}
BENCHMARK(BM_CanonicalDump);

}  // namespace

BENCHMARK_MAIN();
