#include <benchmark/benchmark.h>

#include "zmlp/graph.hpp"
#include "zmlp/toric.hpp"
#include "zmlp/zmlp.hpp"

using namespace zmlp;

static void BM_EnumerateComb(benchmark::State& state) {
    const Int a = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_comb(a, a + 4));
}
BENCHMARK(BM_EnumerateComb)->Arg(9)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

static void BM_CountComb(benchmark::State& state) {
    const Int a = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_comb(a, a + 4));
}
BENCHMARK(BM_CountComb)->Arg(9)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

static void BM_ZmlpFromPair(benchmark::State& state) {
    const DualPair pair = parse_dual_pair("(4,1),(3,3,1)");
    for (auto _ : state) benchmark::DoNotOptimize(zmlp_from_pair(pair));
}
BENCHMARK(BM_ZmlpFromPair)->Unit(benchmark::kMicrosecond);

static void BM_Reqdiv(benchmark::State& state) {
    const LaurentPoly f = *zmlp_from_pair(parse_dual_pair("(4,1),(3,3,1)"));
    for (auto _ : state) benchmark::DoNotOptimize(reqdiv_tuples(f));
}
BENCHMARK(BM_Reqdiv)->Unit(benchmark::kMicrosecond);

static void BM_TriangularReduce(benchmark::State& state) {
    const DualPair pair = parse_dual_pair("(1,1,1),(3,3,3,1)");
    for (auto _ : state) benchmark::DoNotOptimize(triangular_reduce(pair));
}
BENCHMARK(BM_TriangularReduce)->Unit(benchmark::kMillisecond);

static void BM_VerifyNonTriangular(benchmark::State& state) {
    const LaurentPoly f = *zmlp_from_pair(parse_dual_pair("(4,1),(3,3,1)"));
    for (auto _ : state) benchmark::DoNotOptimize(verify_zmlp(f));
}
BENCHMARK(BM_VerifyNonTriangular)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_CanonicalPoly(benchmark::State& state) {
    const LaurentPoly f = LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_poly(f));
}
BENCHMARK(BM_CanonicalPoly)->Unit(benchmark::kMicrosecond);

static void BM_MutationGraph(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_mutation_graph({state.range(0), 0, false}));
}
BENCHMARK(BM_MutationGraph)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SingularityType(benchmark::State& state) {
    const Cone3 cone({{1, 0, 0}, {0, 1, 0}, {1, -7, 12}});
    for (auto _ : state) benchmark::DoNotOptimize(singularity_type(cone));
}
BENCHMARK(BM_SingularityType);

static void BM_Extraction(benchmark::State& state) {
    const DualPair pair = parse_dual_pair("(1,1,1),(3,3,3,1)");
    for (auto _ : state) benchmark::DoNotOptimize(extraction_certificate(pair));
}
BENCHMARK(BM_Extraction)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
