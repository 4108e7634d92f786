#include <benchmark/benchmark.h>

#include "haarlab/finite_group.hpp"
#include "haarlab/haar.hpp"

using namespace haarlab;

namespace {

const BatchFunction kTracePowers = [](const CMatrix& g, std::span<Complex> out) {
  const Complex tr = g.trace();
  out[0] = tr;
  out[1] = tr * tr;
  out[2] = tr * tr * tr;
};

ChartSpec chart_for(int id) {
  switch (id) {
    case 0: return ChartSpec::so(4);
    case 1: return ChartSpec::so(5);
    default: return ChartSpec::su(3);
  }
}

void quadrature(benchmark::State& state, Kernel kernel) {
  const ChartSpec spec = chart_for(static_cast<int>(state.range(0)));
  const QuadratureSpec q{static_cast<int>(state.range(1)), QuadratureRule::TrigGauss};
  const ProductQuadrature pq(spec, q);
  for (auto _ : state) benchmark::DoNotOptimize(pq.sum(kTracePowers, 3, kernel));
  state.SetLabel(spec.name());
  state.counters["nodes"] = static_cast<double>(pq.node_count());
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(pq.node_count()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_QuadratureFast(benchmark::State& state) { quadrature(state, Kernel::Fast); }
void BM_QuadratureReference(benchmark::State& state) { quadrature(state, Kernel::Reference); }

void structure(benchmark::State& state, bool reference) {
  const FiniteGroup g = builtin_group(state.range(0) == 0 ? "S4" : "S5");
  const ConjClasses cls = conjugacy_classes(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference ? structure_constants_reference(g, cls) : structure_constants(g, cls));
  state.SetLabel(g.name());
}

void BM_StructureConstants(benchmark::State& state) { structure(state, false); }
void BM_StructureConstantsReference(benchmark::State& state) { structure(state, true); }

}  // namespace

BENCHMARK(BM_QuadratureFast)->Args({0, 8})->Args({1, 4})->Args({2, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadratureReference)->Args({0, 8})->Args({1, 4})->Args({2, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureConstantsReference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
