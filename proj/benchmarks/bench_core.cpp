#include <benchmark/benchmark.h>

#include <random>

#include "sldic/analysis.hpp"
#include "sldic/rates.hpp"

using namespace sldic;

namespace {

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::bernoulli_distribution bit(0.5);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

void BM_Rank(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const BitMatrix m = random_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_BuildScheme(benchmark::State& state) {
    const ChannelParams p{6, 12, 8};  // two-slot time-sharing construction
    for (auto _ : state) benchmark::DoNotOptimize(build(p));
}
BENCHMARK(BM_BuildScheme);

void BM_VerifyRank(benchmark::State& state) {
    const SchemeDescription s = build({6, 12, 8});
    for (auto _ : state) benchmark::DoNotOptimize(rank_report(s));
}
BENCHMARK(BM_VerifyRank);

void BM_VerifyEnum(benchmark::State& state) {
    const SchemeDescription s = build({2, 4, 2});  // 2^14 source states
    for (auto _ : state) benchmark::DoNotOptimize(check_secrecy_enum(s));
}
BENCHMARK(BM_VerifyEnum);

void BM_Sweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep(6, 5, 5, std::uint64_t{1} << 16));
}
BENCHMARK(BM_Sweep);

}  // namespace

BENCHMARK_MAIN();
