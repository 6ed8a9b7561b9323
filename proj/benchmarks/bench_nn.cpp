#include <benchmark/benchmark.h>

#include "cugan/curriculum.hpp"
#include "cugan/data.hpp"
#include "cugan/difficulty.hpp"
#include "cugan/gan.hpp"
#include "cugan/mlp.hpp"
#include "cugan/rng.hpp"

namespace {

void bench_forward_backward(benchmark::State& state) {
    cugan::RngStream rng{7};
    cugan::Mlp net = cugan::make_mlp(
        {2, 64, 64, 1},
        {cugan::Activation::leaky_relu, cugan::Activation::leaky_relu,
         cugan::Activation::identity},
        false, rng);
    cugan::Matrix batch(static_cast<int>(state.range(0)), 2);
    for (double& v : batch.data) v = rng.gaussian();
    for (auto _ : state) {
        cugan::ForwardCache cache;
        const cugan::Matrix out = cugan::forward(net, batch, nullptr, &cache);
        cugan::Matrix grad(out.rows, out.cols);
        for (double& g : grad.data) g = 1.0;
        auto grads = cugan::backward(net, cache, grad, nullptr);
        benchmark::DoNotOptimize(grads);
    }
}
BENCHMARK(bench_forward_backward)->Arg(64)->Arg(256);

void bench_train_step(benchmark::State& state) {
    const cugan::Dataset ds = cugan::make_ring_gmm(8, 2.0, 0.05, 1000, 42);
    cugan::ScoreSource src;
    src.kind = cugan::ScoreSource::Kind::analytic;
    const cugan::DifficultyScores scores = cugan::resolve_scores(src, ds);

    cugan::GanConfig gan;
    gan.total_iterations = 1000000000;
    gan.seed = 1;
    cugan::CurriculumConfig curriculum;
    curriculum.strategy = cugan::Strategy::sampling;
    curriculum.k = 4.0;
    curriculum.gamma = 5e-4;
    curriculum.total_iterations = gan.total_iterations;

    cugan::Trainer trainer(gan, curriculum, ds, scores);
    for (auto _ : state) {
        auto report = trainer.step();
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bench_train_step);

} // namespace
