#include <benchmark/benchmark.h>

#include "grouptrace/matrix.hpp"

using namespace grouptrace;

namespace {

Matrix dense_test_matrix(const Field& f, std::size_t n) {
    // deterministic full-rank-ish integer matrix with mixed signs
    Matrix m(f, n, n);
    long long v = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            v = (v * 31 + 17) % 19 - 9;
            m.at(i, j) = Scalar::of_int(f, v + (i == j ? 3 : 0));
        }
    return m;
}

} // namespace

static void BM_RankRationalBareiss(benchmark::State& state) {
    const auto m = dense_test_matrix(Field::rationals(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRationalBareiss)->Arg(16)->Arg(32)->Arg(48);

static void BM_RankPrimeField(benchmark::State& state) {
    const auto m = dense_test_matrix(Field::prime_field(65521),
                                     static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrimeField)->Arg(16)->Arg(32)->Arg(64);

static void BM_NullspaceRational(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix m = dense_test_matrix(Field::rationals(), n);
    // force rank deficiency: last row = sum of the first two
    for (std::size_t j = 0; j < n; ++j)
        m.at(n - 1, j) = m.at(0, j) + m.at(1, j);
    for (auto _ : state)
        benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_NullspaceRational)->Arg(16)->Arg(32);
