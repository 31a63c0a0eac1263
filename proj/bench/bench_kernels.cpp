// Serial reference against the OpenMP version of each kernel. Arg(0) is
// serial, Arg(1) parallel.

#include <random>

#include <benchmark/benchmark.h>

#include "invmon/kernels.hpp"
#include "invmon/presentation.hpp"
#include "invmon/propa.hpp"
#include "invmon/stephen.hpp"

using namespace invmon;

namespace {

  Exec exec_of(benchmark::State const& state) {
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
  }

  XGraph const& scary_graph() {
    static XGraph const g = approximate(fixture_scary(), Word(), Budget{4, 1'000'000}).graph;
    return g;
  }

  void all_pairs(benchmark::State& state) {
    auto const& g = scary_graph();
    for (auto _ : state) {
      benchmark::DoNotOptimize(all_pairs_bfs(g, exec_of(state)));
    }
    state.counters["vertices"] = static_cast<double>(g.number_of_vertices());
  }

  void sweep(benchmark::State& state) {
    auto const&       g    = scary_graph();
    std::size_t const n    = g.number_of_vertices();
    auto const        dhat = all_pairs_bfs(g, Exec::serial);
    std::vector<std::uint32_t> dg(dhat.size());
    std::mt19937_64            rng(1);
    for (auto& v : dg) {
      v = static_cast<std::uint32_t>(rng() % 8);
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(distortion_sweep(dhat, dg, n, 6, exec_of(state)));
    }
  }

  void transport(benchmark::State& state) {
    std::mt19937_64 rng(5);
    RandomInstanceShape shape;
    shape.max_y = 40;
    shape.max_x = 120;
    auto const inst = random_instance<double>(rng, shape);
    auto const cm   = analyze_contraction(inst.X, inst.Y, inst.f);
    for (auto _ : state) {
      benchmark::DoNotOptimize(transport_witness(cm, inst.xi, 1e-9, exec_of(state)));
    }
    state.counters["points"] = static_cast<double>(inst.X.size());
  }

}  // namespace

BENCHMARK(all_pairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(transport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
