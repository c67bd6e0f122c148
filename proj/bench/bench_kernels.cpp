// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "adlab/groups/kernels.hpp"
#include "adlab/groups/presets.hpp"
#include "adlab/groups/sweep.hpp"

using namespace adlab::groups;

namespace {

const FiniteGroup& cached(const std::string& spec) {
  static std::map<std::string, FiniteGroup> groups;
  auto it = groups.find(spec);
  if (it == groups.end()) it = groups.emplace(spec, build_group(spec)).first;
  return it->second;
}

const char* kSpecs[] = {"heis:5", "double:3", "wreath:5"};

template <bool Parallel>
void BM_HomKernels(benchmark::State& state) {
  const auto& g = cached(kSpecs[state.range(0)]);
  const auto p = *g.prime();
  const auto gens = g.generator_elements();
  for (auto _ : state) {
    auto mask = Parallel ? kernels::hom_kernel_intersection_parallel(g, p, gens)
                         : kernels::hom_kernel_intersection_serial(g, p, gens);
    benchmark::DoNotOptimize(mask);
  }
  state.SetLabel(g.name());
}

template <bool Parallel>
void BM_PresentationSearch(benchmark::State& state) {
  const auto& g = cached(state.range(0) == 0 ? "meta:5:25:0:6" : "heis:5");
  for (auto _ : state) {
    auto pres = Parallel ? kernels::presentation_search_parallel(g) : kernels::presentation_search_serial(g);
    benchmark::DoNotOptimize(pres);
  }
  state.SetLabel(g.name());
}

template <bool Parallel>
void BM_NormalClosures(benchmark::State& state) {
  const auto& g = cached(state.range(0) == 0 ? "heis:5" : "wreath:3");
  for (auto _ : state) {
    auto subs = Parallel ? kernels::principal_normal_subgroups_parallel(g)
                         : kernels::principal_normal_subgroups_serial(g);
    benchmark::DoNotOptimize(subs);
  }
  state.SetLabel(g.name());
}

template <bool Parallel>
void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) {
    auto s = semidirect_square_sweep(3, Parallel ? Exec::Parallel : Exec::Serial);
    benchmark::DoNotOptimize(s);
  }
}

}  // namespace

BENCHMARK(BM_HomKernels<false>)->Name("hom_kernels/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomKernels<true>)->Name("hom_kernels/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PresentationSearch<false>)->Name("presentations/serial")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PresentationSearch<true>)->Name("presentations/parallel")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalClosures<false>)->Name("normal_closures/serial")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalClosures<true>)->Name("normal_closures/parallel")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<false>)->Name("sweep3/serial")->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_Sweep<true>)->Name("sweep3/parallel")->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
