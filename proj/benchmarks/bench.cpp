#include <benchmark/benchmark.h>

#include <sstream>

#include "domchrom/constructions.hpp"
#include "domchrom/invariants.hpp"
#include "domchrom/planarity.hpp"
#include "domchrom/search.hpp"
#include "domchrom/structure.hpp"

using namespace domchrom;

static void BM_ClassifyOdd(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = build_d_odd({k, 4 * k - 1}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(classify_dk(g));
}
BENCHMARK(BM_ClassifyOdd)->Arg(3)->Arg(5);

static void BM_ClassifyEven(benchmark::State& state) {
  const Graph g = build_d_even({6, 18}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(classify_dk(g));
}
BENCHMARK(BM_ClassifyEven);

static void BM_ClassifyAllOrder7(benchmark::State& state) {
  const auto graphs = enumerate_connected(7);
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(classify_dk(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graphs.size()));
}
BENCHMARK(BM_ClassifyAllOrder7)->Unit(benchmark::kMillisecond);

static void BM_Theorem1(benchmark::State& state) {
  const Graph g = build_d_odd({5, 19}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem1(g));
}
BENCHMARK(BM_Theorem1)->Unit(benchmark::kMicrosecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = build_d_even({4, 16}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_graph6(g));
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_connected(n));
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_Planarity(benchmark::State& state) {
  const auto graphs = enumerate_connected(7);
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(is_planar(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graphs.size()));
}
BENCHMARK(BM_Planarity)->Unit(benchmark::kMillisecond);

static void BM_MembershipOrder8(benchmark::State& state) {
  const auto graphs = generate_connected(8);
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(is_in_class_d3(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * graphs.size()));
}
BENCHMARK(BM_MembershipOrder8)->Unit(benchmark::kMillisecond);

static void BM_ScanBuiltin(benchmark::State& state) {
  const auto source = GraphSource::builtin(1, 7);
  ScanOptions opt;
  opt.checks = CheckSet::parse("invariants,planarity,d3-membership,theorem1");
  opt.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::ostringstream out;
    benchmark::DoNotOptimize(scan_stream(source, opt, &out));
  }
}
BENCHMARK(BM_ScanBuiltin)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
