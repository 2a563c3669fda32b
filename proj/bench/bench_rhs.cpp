#include "esbp/verify.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace esbp;

namespace {

MMSSetup& setup(int order, int h_inv)
{
    static std::map<std::pair<int, int>, MMSSetup> cache;
    auto key = std::make_pair(order, h_inv);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, mms_setup(MMSProblem{}, order, h_inv, Stencil::Narrow)).first;
    return it->second;
}

void apply_bench(benchmark::State& st, bool reference)
{
    MMSSetup& S = setup(int(st.range(0)), int(st.range(1)));
    State s;
    mms_fill(*S.dom, 0.2, s);
    std::vector<double> z;
    for (auto _ : st) {
        if (reference)
            S.op->apply_reference(s.u, z, 0.2, true);
        else
            S.op->apply(s.u, z, 0.2, true);
        benchmark::DoNotOptimize(z.data());
    }
    st.counters["unknowns"] = double(S.dom->size);
    st.counters["points/s"] = benchmark::Counter(double(S.dom->size / 2) * st.iterations(), benchmark::Counter::kIsRate);
}

void BM_apply_openmp(benchmark::State& st) { apply_bench(st, false); }
void BM_apply_reference(benchmark::State& st) { apply_bench(st, true); }

}

BENCHMARK(BM_apply_openmp)->ArgsProduct({{2, 4, 6}, {40, 80}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_reference)->ArgsProduct({{2, 4, 6}, {40, 80}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
