#include <benchmark/benchmark.h>

#include "grouptrace/blocks.hpp"
#include "grouptrace/integral.hpp"

using namespace grouptrace;

static void BM_GramConstantGroupQ(benchmark::State& state) {
    const auto A = constant_group_scheme(
        GroupTable::cyclic(static_cast<std::size_t>(state.range(0))), Field::rationals());
    const auto C = convolution_algebra(A);
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_form_gram(C).entries.rows());
}
BENCHMARK(BM_GramConstantGroupQ)->Arg(12)->Arg(24)->Arg(64);

static void BM_ReductivityDecision(benchmark::State& state) {
    const auto A = product(constant_group_scheme(GroupTable::symmetric3(), Field::rationals()),
                           constant_group_scheme(GroupTable::cyclic(2), Field::rationals()));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_linearly_reductive(A).reductive);
}
BENCHMARK(BM_ReductivityDecision);

static void BM_SeparabilityOracleS3xZ2(benchmark::State& state) {
    const auto A = product(constant_group_scheme(GroupTable::symmetric3(), Field::rationals()),
                           constant_group_scheme(GroupTable::cyclic(2), Field::rationals()));
    const auto C = convolution_algebra(A);
    for (auto _ : state)
        benchmark::DoNotOptimize(separability_oracle(C));
}
BENCHMARK(BM_SeparabilityOracleS3xZ2);

static void BM_SplitCenter(benchmark::State& state) {
    const auto A = mu_n(static_cast<std::size_t>(state.range(0)), Field::prime_field(7));
    const auto C = convolution_algebra(A);
    for (auto _ : state)
        benchmark::DoNotOptimize(split_center(C).block_dims.size());
}
BENCHMARK(BM_SplitCenter)->Arg(6)->Arg(12);

static void BM_ParsevalS3(benchmark::State& state) {
    const auto A = constant_group_scheme(GroupTable::symmetric3(), Field::rationals());
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_parseval(A).fourier_after_phi_is_identity);
}
BENCHMARK(BM_ParsevalS3);
