#include <benchmark/benchmark.h>

#include "quotshrink/standard_groups.hpp"
#include "quotshrink/wreath.hpp"

using namespace quotshrink;

namespace {

void BM_chain_symmetric(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  std::vector<Perm> gens = symmetric_group(n).generators();
  for (auto _ : state) {
    PermGroup g(n, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_chain_symmetric)->Arg(8)->Arg(16)->Arg(30);

void BM_chain_wreath(benchmark::State& state) {
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(3));
  std::vector<Perm> gens = w.group.generators();
  for (auto _ : state) {
    PermGroup g(15, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_chain_wreath);

void BM_membership(benchmark::State& state) {
  PermGroup g = pgamma_l2(9);
  Perm probe = compose(g.generators()[0], g.generators()[1]);
  for (auto _ : state) benchmark::DoNotOptimize(g.contains(probe));
}
BENCHMARK(BM_membership);

void BM_centralizer(benchmark::State& state) {
  auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
  PermGroup n = direct_product(alternating_group(5), alternating_group(5));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer(w.group, n));
}
BENCHMARK(BM_centralizer);

void BM_product_action(benchmark::State& state) {
  for (auto _ : state) {
    auto w = wreath_product_action(alternating_group(5), symmetric_group(2));
    benchmark::DoNotOptimize(w.group.order());
  }
}
BENCHMARK(BM_product_action);

}  // namespace
