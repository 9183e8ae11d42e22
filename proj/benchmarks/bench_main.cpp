#include <benchmark/benchmark.h>

#include <torschain/torschain.hpp>

using namespace torschain;

namespace {

const Universe& a3() {
  static const Universe u(IndecTable::type_a(3, ">>", 2));
  return u;
}

void BM_IndecTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(IndecTable::type_a(n, std::string(static_cast<std::size_t>(n - 1), '>'), 2));
}
BENCHMARK(BM_IndecTable)->Arg(2)->Arg(3)->Arg(4);

void BM_Lattice(benchmark::State& state) {
  const Universe u(IndecTable::type_a(static_cast<int>(state.range(0)), std::string(static_cast<std::size_t>(state.range(0) - 1), '>'), 2));
  for (auto _ : state) {
    const auto lat = enumerate_lattice(u);
    benchmark::DoNotOptimize(enumerate_mgs(lat, u).size());
  }
}
BENCHMARK(BM_Lattice)->Arg(2)->Arg(3)->Arg(4);

// HN filtrations of every module of total dimension <= 4 along each MGS chain.
void BM_HN(benchmark::State& state) {
  const auto& u = a3();
  const auto mgs = enumerate_mgs(enumerate_lattice(u), u);
  std::vector<Rep> modules;
  for (const auto& m : classes_up_to_total(u.table(), 4)) modules.push_back(u.realize(m));
  for (auto _ : state) {
    for (const auto& g : mgs) {
      const StepChain c = mgs_to_chain(g, u);
      for (const auto& m : modules) benchmark::DoNotOptimize(hn_filtration(c, m, u));
    }
  }
}
BENCHMARK(BM_HN)->Unit(benchmark::kMillisecond);

void BM_HallProduct(benchmark::State& state) {
  const Universe u(IndecTable::type_a(2, ">", static_cast<int>(state.range(0))));
  HallAlgebra h(u, {2, 2});
  const HallElem all = h.e_subcategory(u.all());
  for (auto _ : state) benchmark::DoNotOptimize(h.product(all, all));
}
BENCHMARK(BM_HallProduct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
