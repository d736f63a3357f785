#include <benchmark/benchmark.h>

#include "grmds/cauchy.hpp"

namespace {

using namespace grmds;

GRContextPtr ring_4_256() {
    // GR(2^2, 2^8), modulus x^4 + 2x^2 + 3x + 1
    return GRContext::make(2, 2, ZPoly(4, {1, 3, 2, 0, 1}));
}

GRMatrix cauchy_of_order(const GRContextPtr& ctx, std::size_t k) {
    CauchySpec spec;
    spec.kind = CauchyKind::Type1Sub;
    spec.xs = xi_powers(ctx, 0, k);
    spec.ys = xi_powers(ctx, k, k);
    return build_cauchy(spec, ctx);
}

void BM_MatDet(benchmark::State& state) {
    auto ctx = ring_4_256();
    GRMatrix a = cauchy_of_order(ctx, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mat_det(a));
}
BENCHMARK(BM_MatDet)->DenseRange(2, 7);

void BM_MdsExhaustive(benchmark::State& state) {
    auto ctx = ring_4_256();
    GRMatrix a = cauchy_of_order(ctx, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mat_is_mds_exhaustive(a));
}
BENCHMARK(BM_MdsExhaustive)->DenseRange(2, 6);

void BM_MdsFieldReduction(benchmark::State& state) {
    auto ctx = ring_4_256();
    GRMatrix a = cauchy_of_order(ctx, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mat_is_mds_fast(a));
}
BENCHMARK(BM_MdsFieldReduction)->DenseRange(2, 6);

void BM_BuildCauchy(benchmark::State& state) {
    auto ctx = ring_4_256();
    CauchySpec spec;
    spec.kind = CauchyKind::Type1Sub;
    const auto k = static_cast<std::size_t>(state.range(0));
    spec.xs = xi_powers(ctx, 0, k);
    spec.ys = xi_powers(ctx, k, k);
    for (auto _ : state) benchmark::DoNotOptimize(build_cauchy(spec, ctx));
}
BENCHMARK(BM_BuildCauchy)->DenseRange(2, 7);

}  // namespace

BENCHMARK_MAIN();
