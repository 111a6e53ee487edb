#include <benchmark/benchmark.h>

#include "motivic/count_kernels.hpp"
#include "motivic/variety.hpp"

using namespace motivic;

namespace {

const PolySystem& surface() {
    static const VarietyExpr x = parse_variety("affine over 3 vars x,y,z : z^2 - x^3 - y^3 - x*y + 1");
    return x.system();
}

const PolySystem& curve() {
    static const VarietyExpr x = parse_variety("affine over 2 vars x,y : y^2 + y + x^3 + x*y");
    return x.system();
}

void BM_SurfaceSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::count_affine_serial(surface(), st.range(0), 1u << 30));
}
void BM_SurfaceParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::count_affine_parallel(surface(), st.range(0), 1u << 30));
}
void BM_CurveParallelZech(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::count_affine_parallel(curve(), st.range(0), 1u << 30));
}
void BM_CurveParallelGeneric(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::count_affine_parallel_generic(curve(), st.range(0), 1u << 30));
}

}  // namespace

BENCHMARK(BM_SurfaceSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceParallel)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveParallelZech)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveParallelGeneric)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
