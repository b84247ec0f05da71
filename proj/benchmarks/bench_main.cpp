// Microbenchmarks for the hot kernels: GF(2) bit operations, runlength
// energy evaluation, minimum-weight codeword sampling, Metropolis stepping,
// and the exhaustive Gray-code scan. Build with -DRMCOUNT_BUILD_BENCHMARKS=ON
// (default) and run ./benchmarks/rmcount_bench.

#include <benchmark/benchmark.h>

#include "rmcount/constraint.hpp"
#include "rmcount/estimator.hpp"
#include "rmcount/oracle.hpp"
#include "rmcount/rm_code.hpp"
#include "rmcount/rng.hpp"
#include "rmcount/sampler.hpp"

namespace {

using rmcount::BitVector;
using rmcount::Constraint;
using rmcount::RmCode;
using rmcount::RngStream;

void BM_XorInto(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(1);
    BitVector a(n), b(n);
    rng.fill_bits(a);
    rng.fill_bits(b);
    for (auto _ : state) {
        a ^= b;
        benchmark::DoNotOptimize(a.words().data());
    }
}
BENCHMARK(BM_XorInto)->Arg(128)->Arg(512);

void BM_RllEnergy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    RngStream rng(2);
    BitVector x(n);
    rng.fill_bits(x);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rmcount::rll_energy(x, d));
    }
}
BENCHMARK(BM_RllEnergy)->Args({128, 1})->Args({512, 1})->Args({512, 2});

void BM_MinWeightSample(benchmark::State& state) {
    const RmCode code(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    RngStream rng(3);
    std::vector<std::uint32_t> support;
    for (auto _ : state) {
        code.sample_min_weight_support(rng, support);
        benchmark::DoNotOptimize(support.data());
    }
}
BENCHMARK(BM_MinWeightSample)->Args({7, 3})->Args({8, 1})->Args({9, 4});

void BM_MetropolisStep(benchmark::State& state) {
    const RmCode code(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    rmcount::MetropolisSampler sampler(code, {2.0, Constraint::rll(1)});
    RngStream rng(4);
    auto chain = sampler.make_state(rmcount::default_init(code, rmcount::InitMode::kRandom, rng));
    for (auto _ : state) {
        sampler.step(chain, rng);
        benchmark::DoNotOptimize(chain.energy);
    }
}
BENCHMARK(BM_MetropolisStep)->Args({7, 2})->Args({8, 1})->Args({9, 4});

void BM_OracleScan(benchmark::State& state) {
    const RmCode code(5, 2);
    const Constraint rll = Constraint::rll(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rmcount::exact_constrained_count(code, rll));
    }
    state.SetItemsProcessed(state.iterations() * (1ll << code.k()));
}
BENCHMARK(BM_OracleScan);

void BM_FullRankSample(benchmark::State& state) {
    RngStream rng(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rmcount::sample_full_rank_matrix(4, 9, rng));
    }
}
BENCHMARK(BM_FullRankSample);

}  // namespace

BENCHMARK_MAIN();
