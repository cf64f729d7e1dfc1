// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "noohi/homs.hpp"
#include "noohi/oracle.hpp"

using namespace noohi;

namespace {

GeneratorSymbol sym(const std::string& name) { return {"", name}; }
Word letter(const std::string& name, int e = 1) { return Word::generator(sym(name), e); }

/// <a, b, c | [a, b] c^2, (a c)^3>: few relators, many candidate tuples.
Presentation linked() {
  const Word a = letter("a");
  const Word b = letter("b");
  const Word c = letter("c");
  return Presentation({sym("a"), sym("b"), sym("c")},
                      {a * b * a.inverse() * b.inverse() * c * c, (a * c) * (a * c) * (a * c)});
}

Presentation by_name(int which) {
  switch (which) {
    case 0: return linked();
    default: return GroupSpec::symmetric(4).presentation();
  }
}

SchemeConfig config(int which) {
  switch (which) {
    case 0: return fixtures::load_corpus("star");
    case 1: return fixtures::load_corpus("theta");
    default: return fixtures::load_corpus("nontrivial-devissage");
  }
}

void BM_CountHoms(benchmark::State& state) {
  const Presentation p = by_name(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, d));
}

void BM_CountHomsReference(benchmark::State& state) {
  const Presentation p = by_name(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_homs(p, d));
}

void BM_RigidCount(benchmark::State& state) {
  const SchemeConfig cfg = config(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rigid_count(cfg, d));
}

void BM_RigidCountReference(benchmark::State& state) {
  const SchemeConfig cfg = config(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rigid_count(cfg, d));
}

void BM_ConnectedCount(benchmark::State& state) {
  const SchemeConfig cfg = config(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(connected_count(cfg, d));
}

void BM_ConnectedCountReference(benchmark::State& state) {
  const SchemeConfig cfg = config(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::connected_count(cfg, d));
}

// Arguments: (presentation or config index, degree).
void hom_args(benchmark::internal::Benchmark* b) {
  for (int which : {0, 1}) {
    for (int d : {4, 5}) b->Args({which, d});
  }
}

void cover_args(benchmark::internal::Benchmark* b) {
  for (int which : {1, 2}) b->Args({which, 3});
  b->Args({0, 3});
}

}  // namespace

BENCHMARK(BM_CountHoms)->Apply(hom_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountHomsReference)->Apply(hom_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RigidCount)->Apply(cover_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RigidCountReference)->Apply(cover_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConnectedCount)->Apply(cover_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConnectedCountReference)->Apply(cover_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
