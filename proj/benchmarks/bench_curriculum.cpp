#include <benchmark/benchmark.h>

#include "cugan/curriculum.hpp"
#include "cugan/rng.hpp"

namespace {

cugan::DifficultyScores random_scores(int n) {
    cugan::RngStream rng{17};
    cugan::DifficultyScores s;
    s.s.resize(n);
    for (double& v : s.s) v = 2.0 * rng.uniform() - 1.0;
    return s;
}

void bench_batch_weights(benchmark::State& state) {
    const auto scores = random_scores(static_cast<int>(state.range(0)));
    cugan::CurriculumConfig config;
    config.strategy = cugan::Strategy::weighting;
    config.k = 2.0;
    config.gamma = 5e-4;
    config.total_iterations = 20000;
    long t = 0;
    for (auto _ : state) {
        auto w = cugan::batch_weights(scores, t++ % 20000, config);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(bench_batch_weights)->Arg(1000)->Arg(8000)->Arg(100000);

void bench_sample_probabilities(benchmark::State& state) {
    const auto scores = random_scores(static_cast<int>(state.range(0)));
    cugan::CurriculumConfig config;
    config.strategy = cugan::Strategy::sampling;
    config.k = 4.0;
    config.gamma = 5e-4;
    config.total_iterations = 20000;
    long t = 0;
    for (auto _ : state) {
        auto p = cugan::sample_probabilities(scores, t++ % 20000, config);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bench_sample_probabilities)->Arg(8000)->Arg(100000);

void bench_alias_draws(benchmark::State& state) {
    const auto scores = random_scores(8000);
    cugan::CurriculumConfig config;
    config.strategy = cugan::Strategy::sampling;
    config.k = 4.0;
    config.gamma = 5e-4;
    config.total_iterations = 20000;
    const auto probs = cugan::sample_probabilities(scores, 100, config);
    cugan::RngStream rng{3};
    for (auto _ : state) {
        auto idx = cugan::draw_indices(probs, static_cast<int>(state.range(0)), rng);
        benchmark::DoNotOptimize(idx);
    }
}
BENCHMARK(bench_alias_draws)->Arg(64)->Arg(1024);

} // namespace
