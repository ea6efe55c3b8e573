// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "algz/oracle.hpp"
#include "algz/qseries.hpp"

using namespace algz;

namespace
{

Execution mode(const benchmark::State &state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State &state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_check_pos(benchmark::State &state)
{
    FamilySpec spec;
    spec.max_weight = 8;
    spec.param_max = 2;
    spec.b_max = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_bijection(MapName::pos, spec, mode(state)));
    }
    label(state);
}

void BM_enum_family_D(benchmark::State &state)
{
    FamilySpec spec;
    spec.family = Family::D;
    spec.max_weight = 8;
    spec.param_min = 1;
    spec.param_max = 2;
    spec.b_max = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enum_family(spec, mode(state)));
    }
    label(state);
}

void BM_laurent_mul(benchmark::State &state)
{
    SeriesParams p;
    p.qmax = 24;
    p.zmax = 5;
    const ZLaurentSeries x = expand_side(Side::lhs_1psi1, p);
    const ZLaurentSeries y = expand_side(Side::rhs_1psi1, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(x, y, -5, 5, mode(state)));
    }
    label(state);
}

} // namespace

BENCHMARK(BM_check_pos)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enum_family_D)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_laurent_mul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
