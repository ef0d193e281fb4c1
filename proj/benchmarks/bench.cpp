#include <benchmark/benchmark.h>

#include "kao/equivalence.hpp"
#include "kao/harness.hpp"
#include "kao/linsys.hpp"

namespace {

kao::Signature bench_sig() {
    return kao::Signature({"o1", "o2"}, {"x1", "x2"});
}

void BM_decide_random(benchmark::State& state) {
    kao::GenConfig cfg;
    cfg.max_size = static_cast<int>(state.range(0));
    kao::Signature sig = bench_sig();
    std::uint64_t seed = 100;
    for (auto _ : state) {
        cfg.seed = seed++;
        kao::Term e = kao::gen_term(cfg);
        cfg.seed = seed++;
        kao::Term f = kao::gen_term(cfg);
        benchmark::DoNotOptimize(kao::decide(e, f, sig));
    }
}
BENCHMARK(BM_decide_random)->Arg(6)->Arg(10);

void BM_hat_random(benchmark::State& state) {
    kao::GenConfig cfg;
    cfg.max_size = static_cast<int>(state.range(0));
    kao::Signature sig = bench_sig();
    std::uint64_t seed = 200;
    for (auto _ : state) {
        cfg.seed = seed++;
        kao::Term e = kao::gen_term(cfg);
        benchmark::DoNotOptimize(kao::hat(e, sig));
    }
}
BENCHMARK(BM_hat_random)->Arg(4)->Arg(5);

void BM_language_oracle(benchmark::State& state) {
    kao::Signature sig = bench_sig();
    kao::Term e = kao::parse_term("([o1];x1 + x2*)*", sig);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kao::kao_language(e, static_cast<int>(state.range(0)), sig));
}
BENCHMARK(BM_language_oracle)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
