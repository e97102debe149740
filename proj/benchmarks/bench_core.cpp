#include <benchmark/benchmark.h>

#include "bim/bounded_sim.hpp"
#include "bim/generators.hpp"
#include "bim/greedy_star.hpp"
#include "bim/protocol.hpp"
#include "bim/subdivision.hpp"

using namespace bim;

static void BM_Subdivide(benchmark::State& state) {
  const auto d2 = gen_simplex(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_subdivide(d2, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Subdivide)->Arg(1)->Arg(2)->Arg(3);

static void BM_ProtocolComplex(benchmark::State& state) {
  const auto d2 = gen_simplex(2);
  const auto p = static_cast<Pattern>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(protocol_complex(d2, p, 2));
  state.SetLabel(std::string(to_string(p)));
}
BENCHMARK(BM_ProtocolComplex)->DenseRange(0, 2);

static void BM_Isomorphism(benchmark::State& state) {
  const auto d2 = gen_simplex(2);
  const auto a = iterate_subdivide(d2, 2);
  const auto b = protocol_complex(d2, Pattern::IIS, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_Isomorphism);

static void BM_ScheduleOracle(benchmark::State& state) {
  const auto d2 = gen_simplex(2);
  for (auto _ : state) benchmark::DoNotOptimize(schedule_oracle(d2, {0, 1, 2}, Pattern::IC));
}
BENCHMARK(BM_ScheduleOracle)->Unit(benchmark::kMillisecond);

static void BM_GreedyStar(benchmark::State& state) {
  const auto c = protocol_complex(gen_simplex(2), Pattern::IC, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        split_to_budget(greedy_star(c).sequence, c, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_GreedyStar)->Arg(1)->Arg(2)->Arg(3);

static void BM_BoundedProtocol(benchmark::State& state) {
  const auto c = gen_random(101, 3, 4);
  const auto ws = split_to_budget(greedy_star(c).sequence, c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_protocol_complex(c, ws));
}
BENCHMARK(BM_BoundedProtocol);

BENCHMARK_MAIN();
