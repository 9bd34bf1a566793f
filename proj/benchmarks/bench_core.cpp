#include <benchmark/benchmark.h>

#include <random>

#include "rmclass/burnside.hpp"
#include "rmclass/conjclasses.hpp"
#include "rmclass/gf2.hpp"
#include "rmclass/repr.hpp"

using namespace rmclass;

namespace {

gf2::BitMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    gf2::BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() & 1u)
                m.set(r, c);
    return m;
}

group::AffineElement random_element(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto size = static_cast<std::size_t>(n);
    for (;;) {
        auto a = random_matrix(size, rng());
        if (gf2::rank(a) != size)
            continue;
        gf2::BitVector b(size);
        for (std::size_t i = 0; i < size; ++i)
            if (rng() & 1u)
                b.set(i);
        return {std::move(a), std::move(b)};
    }
}

void BM_Rank(benchmark::State& state)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(gf2::rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(120)->Arg(256)->Arg(512)->Arg(1024);

void BM_FullRepresentation(benchmark::State& state)
{
    const auto g = random_element(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(repr::full_representation(g));
}
BENCHMARK(BM_FullRepresentation)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_TauMatrix(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto g = random_element(n, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(repr::tau_matrix(g, n, 1));
}
BENCHMARK(BM_TauMatrix)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_AffineCells(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(conj::affine_cells(n));
}
BENCHMARK(BM_AffineCells)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Count(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto cells = conj::affine_cells(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(burnside::count(n, n, 1, cells, "canonical"));
}
BENCHMARK(BM_Count)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
