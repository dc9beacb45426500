#include <benchmark/benchmark.h>

#include <vector>

#include "nilaut/families.hpp"
#include "nilaut/invariants.hpp"
#include "nilaut/kernels.hpp"

using namespace nilaut;

namespace {

FiniteGroup group_for(int which) {
  switch (which) {
    case 0: return paper_example_32();
    case 1: return direct_product(dihedral(8), dihedral(8));
    case 2: return extraspecial(3, 2, ExtraspecialType::Plus);
    default: return heisenberg(2, 2);
  }
}

void associativity(benchmark::State& state, kernels::Policy policy) {
  const auto g = group_for(static_cast<int>(state.range(0)));
  const std::vector<Index> t(g.table().begin(), g.table().end());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::find_associativity_violation(t, g.order(), policy));
  state.SetLabel(g.name() + " |G|=" + std::to_string(g.order()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.order() * g.order() * g.order()));
}

void automorphisms(benchmark::State& state, kernels::Policy policy) {
  const auto g = group_for(static_cast<int>(state.range(0)));
  const auto gens = minimal_generating_set(g);
  kernels::HomSearch s{&g, &g, gens, {}, true};
  for (Index x : gens) {
    std::vector<Index> c;
    for (Index y = 0; y < g.order(); ++y)
      if (g.element_order(y) == g.element_order(x)) c.push_back(y);
    s.candidates.push_back(std::move(c));
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::search_homomorphisms(s, policy));
  state.SetLabel(g.name() + " candidates=" + std::to_string(kernels::candidate_count(s)));
}

}  // namespace

BENCHMARK_CAPTURE(associativity, serial, kernels::Policy::Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(associativity, parallel, kernels::Policy::Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(automorphisms, serial, kernels::Policy::Serial)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(automorphisms, parallel, kernels::Policy::Parallel)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
