#include <benchmark/benchmark.h>

#include "grouptrace/hopf.hpp"

using namespace grouptrace;

static void BM_VerifyAxiomsConstantGroup(benchmark::State& state) {
    const auto A = constant_group_scheme(
        GroupTable::cyclic(static_cast<std::size_t>(state.range(0))), Field::rationals());
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hopf_axioms(A).all_pass());
}
BENCHMARK(BM_VerifyAxiomsConstantGroup)->Arg(6)->Arg(12)->Arg(24);

static void BM_BuildProduct(benchmark::State& state) {
    const auto A = constant_group_scheme(GroupTable::symmetric3(), Field::rationals());
    const auto B = constant_group_scheme(GroupTable::cyclic(2), Field::rationals());
    for (auto _ : state)
        benchmark::DoNotOptimize(product(A, B).dim);
}
BENCHMARK(BM_BuildProduct);
