// Serial vs OpenMP-parallel margin aggregation and constant
// estimation.  Both paths share the deterministic reduction, so the
// comparison is purely about the evaluation loop.

#include <benchmark/benchmark.h>

#include "bh/estimation.hpp"

namespace {

using namespace bh;

struct Fixture {
    FunctionOracle f = make_log_sum_exp(4);
    NormedSpace s = NormedSpace::linf(4);
    ConvexDomain d = ConvexDomain::whole_space(s);
};

void bench_run_condition(benchmark::State& state, Exec exec) {
    Fixture fx;
    const int budget = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto v = run_condition(fx.f, fx.s, fx.d, ConditionId::descent_lemma, 1.0,
                                     budget, 42, exec);
        benchmark::DoNotOptimize(v.worst_margin);
    }
    state.SetItemsProcessed(state.iterations() * budget);
}

void bench_estimate(benchmark::State& state, Exec exec) {
    Fixture fx;
    const int budget = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto e = estimate_constant(fx.f, fx.s, fx.d, ConditionId::lip_gradient,
                                         budget, 42, exec);
        benchmark::DoNotOptimize(e.L_hat);
    }
    state.SetItemsProcessed(state.iterations() * budget);
}

void RunCondition_Serial(benchmark::State& s) { bench_run_condition(s, Exec::serial); }
void RunCondition_Parallel(benchmark::State& s) { bench_run_condition(s, Exec::parallel); }
void Estimate_Serial(benchmark::State& s) { bench_estimate(s, Exec::serial); }
void Estimate_Parallel(benchmark::State& s) { bench_estimate(s, Exec::parallel); }

BENCHMARK(RunCondition_Serial)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(RunCondition_Parallel)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(Estimate_Serial)->Arg(1000)->Arg(10000);
BENCHMARK(Estimate_Parallel)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
