#include <benchmark/benchmark.h>

#include "duet/allocation.hpp"
#include "duet/bench.hpp"
#include "duet/execution.hpp"
#include "duet/sequencing.hpp"
#include "duet/step_allocators.hpp"

using namespace duet;

namespace {

// First regular instance at size n, so every benchmark has a non-trivial plan.
Scene regular_scene(std::size_t n) {
    GenerationParams p;
    p.n_objects = n;
    for (std::uint64_t seed = 1;; ++seed) {
        Scene s = generate_scene(seed, p);
        if (classify_instance(s) == InstanceKind::regular) return s;
    }
}

void BM_BuildTGraph(benchmark::State& state) {
    const Scene s = regular_scene(static_cast<std::size_t>(state.range(0)));
    const SceneState st(s);
    for (auto _ : state) benchmark::DoNotOptimize(build_tgraph(st, 0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTGraph)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oNCubed);

void BM_PlanBoth(benchmark::State& state) {
    const Scene s = regular_scene(static_cast<std::size_t>(state.range(0)));
    const SceneState st(s);
    for (auto _ : state) benchmark::DoNotOptimize(plan_both(st));
}
BENCHMARK(BM_PlanBoth)->Arg(12)->Arg(20)->Arg(40);

void BM_Search(benchmark::State& state) {
    const Scene s = regular_scene(static_cast<std::size_t>(state.range(0)));
    const SceneState st(s);
    const auto plans = plan_both(st);
    std::size_t expansions = 0;
    for (auto _ : state) {
        const auto out = search_allocate(st, plans);
        expansions = out.expansions;
        benchmark::DoNotOptimize(out);
    }
    state.counters["expansions"] = static_cast<double>(expansions);
}
BENCHMARK(BM_Search)->Arg(12)->Arg(16)->Arg(20);

void BM_Greedy(benchmark::State& state) {
    const Scene s = regular_scene(static_cast<std::size_t>(state.range(0)));
    const SceneState st(s);
    const auto plans = plan_both(st);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_allocate(st, plans));
}
BENCHMARK(BM_Greedy)->Arg(12)->Arg(20)->Arg(40);

void BM_SequenceActions(benchmark::State& state) {
    const Scene s = regular_scene(20);
    const Allocation allocation = run_mission(s, {}).executed_allocation();
    for (auto _ : state) benchmark::DoNotOptimize(sequence_actions(s, allocation));
}
BENCHMARK(BM_SequenceActions);

void BM_Mission(benchmark::State& state) {
    const Scene s = regular_scene(20);
    MissionOptions opt;
    opt.method = static_cast<Method>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_mission(s, opt));
    state.SetLabel(to_string(opt.method));
}
BENCHMARK(BM_Mission)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
