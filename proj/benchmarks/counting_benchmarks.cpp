// The point of the recurrences: evaluating them is linear in n, the
// closed forms cost a few binomials per index, and the brute-force oracle
// is exponential. These benchmarks make the gap visible.

#include <benchmark/benchmark.h>

#include "schreier/closed_forms.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/recurrence.hpp"

using namespace schreier;

namespace {

void BM_enumerate_uncolored(benchmark::State& state) {
    const FamilyParams params = FamilyParams::uncolored(2, 1);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_by_enumeration(params, n));
    }
}
BENCHMARK(BM_enumerate_uncolored)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_closed_form_uncolored(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_A_closed(2, 1, n));
    }
}
BENCHMARK(BM_closed_form_uncolored)->Arg(20)->Arg(100)->Arg(400);

void BM_recurrence_sequence(benchmark::State& state) {
    const auto schema = schema_for(TheoremId::A, FamilyParams::uncolored(2, 1));
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_recurrence(schema, n));
    }
}
BENCHMARK(BM_recurrence_sequence)->Arg(20)->Arg(100)->Arg(400);

void BM_closed_form_colored(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_B_closed(3, 2, n));
    }
}
BENCHMARK(BM_closed_form_colored)->Arg(50)->Arg(200);

void BM_discover(benchmark::State& state) {
    const auto seq = sequence_of(FamilyParams::general(2, 1, 5), 18);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discover_recurrence(seq, 7));
    }
}
BENCHMARK(BM_discover);

}  // namespace

BENCHMARK_MAIN();
