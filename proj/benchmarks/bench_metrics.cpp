#include <benchmark/benchmark.h>

#include "cugan/metrics.hpp"
#include "cugan/rng.hpp"

namespace {

cugan::Matrix cloud(int n, cugan::RngStream& rng) {
    cugan::Matrix m(n, 2);
    for (double& v : m.data) v = rng.gaussian();
    return m;
}

void bench_sliced_wasserstein(benchmark::State& state) {
    cugan::RngStream rng{5};
    const cugan::Matrix a = cloud(8000, rng);
    const cugan::Matrix b = cloud(2048, rng);
    for (auto _ : state) {
        cugan::RngStream metric_rng{9};
        const double d =
            cugan::sliced_wasserstein(a, b, static_cast<int>(state.range(0)), metric_rng);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bench_sliced_wasserstein)->Arg(32)->Arg(128);

} // namespace
