#include <doctest.h>

#include <cmath>
#include <vector>

#include "cugan/curriculum.hpp"
#include "cugan/errors.hpp"

using namespace cugan;

namespace {

CurriculumConfig make_config(Strategy strategy, double k, double gamma, long total) {
    CurriculumConfig c;
    c.strategy = strategy;
    c.k = k;
    c.gamma = gamma;
    c.total_iterations = total;
    if (strategy == Strategy::batches) c.stage_cuts = {total * 3 / 16, total * 5 / 16};
    return c;
}

std::vector<double> draw_frequencies(std::span<const double> probs, int draws,
                                     RngStream& rng) {
    std::vector<double> freq(probs.size(), 0.0);
    for (int idx : draw_indices(probs, draws, rng)) freq[static_cast<std::size_t>(idx)] += 1.0;
    for (double& f : freq) f /= draws;
    return freq;
}

} // namespace

TEST_CASE("easiness weight endpoints and decay") {
    CHECK(easiness_weight(1.0, 0, 1.0, 5e-5) == 0.0);
    CHECK(easiness_weight(-1.0, 0, 1.0, 5e-5) == 2.0);
    for (long t : {0L, 17L, 100000L}) {
        for (double k : {0.5, 1.0, 4.0}) {
            CHECK(easiness_weight(0.0, t, k, 5e-5) == 1.0);
        }
    }
    // gamma * t = 1 exactly.
    CHECK(easiness_weight(1.0, 20000, 1.0, 5e-5) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(1.0 - std::exp(-1.0) == doctest::Approx(0.6321205588285577).epsilon(1e-15));
}

TEST_CASE("weight convergence bound holds with equality") {
    RngStream rng{811};
    for (int trial = 0; trial < 500; ++trial) {
        const double s = 2.0 * rng.uniform() - 1.0;
        const long t = rng.uniform_int(100000);
        const double k = 0.1 + 4.0 * rng.uniform();
        const double gamma = 1e-6 + 1e-3 * rng.uniform();
        const double w = easiness_weight(s, t, k, gamma);
        const double expected_gap = k * std::abs(s) * std::exp(-gamma * t);
        CHECK(std::abs(w - 1.0) == doctest::Approx(expected_gap).epsilon(1e-12));
        CHECK(std::abs(w - 1.0) <= k * std::exp(-gamma * t) + 1e-12);
    }
}

TEST_CASE("batch weights evaluate element-wise") {
    const CurriculumConfig c = make_config(Strategy::weighting, 2.0, 5e-5, 1000);
    const std::vector<double> w = batch_weights({{-1.0, 0.0, 1.0}}, 0, c);
    CHECK(w == std::vector<double>{3.0, 1.0, -1.0});

    const CurriculumConfig c1 = make_config(Strategy::weighting, 1.0, 5e-5, 1000);
    CHECK(batch_weights({{0.5}}, 0, c1) == std::vector<double>{0.5});

    // Large t: every weight collapses to 1.
    const std::vector<double> late = batch_weights({{-1.0, 0.3, 1.0}}, 2000000, c);
    for (double v : late) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampling probabilities match the normalized shifted weights") {
    // k=4 at t=0: shifted weights are k*(1 - s), so {1, -1} -> {0, 8}.
    const CurriculumConfig c4 = make_config(Strategy::sampling, 4.0, 5e-5, 1000);
    const std::vector<double> p = sample_probabilities({{1.0, -1.0}}, 0, c4);
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 1.0);

    // Weights {0.5, 1.0, 1.5} arise from scores {0.5, 0, -0.5} at k=1, t=0.
    const CurriculumConfig c1 = make_config(Strategy::sampling, 1.0, 5e-5, 1000);
    const std::vector<double> p2 = sample_probabilities({{0.5, 0.0, -0.5}}, 0, c1);
    CHECK(p2[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(p2[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(p2[2] == doctest::Approx(0.5).epsilon(1e-12));

    const std::vector<double> direct = normalize_shifted_weights(std::vector<double>{0.5, 1.0, 1.5});
    CHECK(direct[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    // Large t: uniform over n=4.
    const std::vector<double> late =
        sample_probabilities({{-1.0, -0.2, 0.4, 1.0}}, 40000000, c4);
    for (double v : late) CHECK(v == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("probability convergence toward uniform is monotone in t") {
    const DifficultyScores scores{{-1.0, -0.6, -0.1, 0.2, 0.7, 1.0}};
    const double n_inv = 1.0 / 6.0;
    for (double k : {0.5, 1.0, 2.0, 4.0}) {
        const CurriculumConfig c = make_config(Strategy::sampling, k, 5e-4, 20000);
        double prev = 1e9;
        for (long t : {0L, 100L, 1000L, 5000L, 20000L}) {
            const std::vector<double> p = sample_probabilities(scores, t, c);
            double dev = 0.0;
            for (double v : p) dev = std::max(dev, std::abs(v - n_inv));
            CHECK(dev <= prev + 1e-15);
            prev = dev;
        }
        // t = 10/gamma.
        const std::vector<double> p = sample_probabilities(scores, 20000, c);
        for (double v : p) CHECK(std::abs(v - n_inv) < 1e-4);
    }
}

TEST_CASE("probabilities are invariant under rescaling of the shifted weights") {
    RngStream rng{4242};
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + rng.uniform_int(30);
        std::vector<double> shifted(n);
        for (double& v : shifted) v = rng.uniform() * 5.0;
        shifted[rng.uniform_int(n)] = 0.0;  // zero entries stay zero
        const double scale = 0.01 + 100.0 * rng.uniform();
        std::vector<double> rescaled = shifted;
        for (double& v : rescaled) v *= scale;
        const auto p1 = normalize_shifted_weights(shifted);
        const auto p2 = normalize_shifted_weights(rescaled);
        for (int i = 0; i < n; ++i) CHECK(p1[i] == doctest::Approx(p2[i]).epsilon(1e-12));
    }
}

TEST_CASE("the all-zero weight vector is rejected with guidance") {
    const CurriculumConfig c = make_config(Strategy::sampling, 1.0, 5e-5, 1000);
    CHECK_THROWS_AS(static_cast<void>(sample_probabilities({{1.0, 1.0, 1.0}}, 0, c)),
                    DegenerateDistributionError);
    // Any t > 0 resolves the degeneracy.
    CHECK_NOTHROW(static_cast<void>(sample_probabilities({{1.0, 1.0, 1.0}}, 1, c)));
}

TEST_CASE("draw_indices point mass") {
    RngStream rng{5};
    const std::vector<double> p = {0.0, 1.0};
    for (int idx : draw_indices(p, 500, rng)) CHECK(idx == 1);
}

TEST_CASE("draw_indices frequencies within binomial standard errors") {
    RngStream rng{90213};
    // Uniform over 10: 100000 draws, +-3 * sqrt(0.1*0.9/100000).
    const std::vector<double> uniform(10, 0.1);
    const auto freq = draw_frequencies(uniform, 100000, rng);
    const double bound = 3.0 * std::sqrt(0.1 * 0.9 / 100000.0);
    for (double f : freq) CHECK(std::abs(f - 0.1) <= bound);

    // {1/6, 1/3, 1/2}: 60000 draws within 3 sigma per index.
    const std::vector<double> probs = {1.0 / 6.0, 1.0 / 3.0, 0.5};
    const auto freq2 = draw_frequencies(probs, 60000, rng);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double se = std::sqrt(probs[i] * (1.0 - probs[i]) / 60000.0);
        CHECK(std::abs(freq2[i] - probs[i]) <= 3.0 * se);
    }
}

TEST_CASE("active pool grows through the stage schedule") {
    CurriculumConfig c = make_config(Strategy::batches, 1.0, 5e-5, 80000);
    c.stage_cuts = {15000, 25000};
    const long n = 9000;
    CHECK(active_pool_size(0, c, n) == 3000);
    CHECK(active_pool_size(14999, c, n) == 3000);
    CHECK(active_pool_size(15000, c, n) == 6000);
    CHECK(active_pool_size(24999, c, n) == 6000);
    CHECK(active_pool_size(25000, c, n) == n);
    CHECK(active_pool_size(79999, c, n) == n);

    // ceil rounding on a non-divisible set.
    CHECK(active_pool_size(0, c, 10) == 4);     // ceil(10/3)
    CHECK(active_pool_size(15000, c, 10) == 7);  // ceil(20/3)
    CHECK(active_pool_size(25000, c, 10) == 10);

    CurriculumConfig single = make_config(Strategy::batches, 1.0, 5e-5, 80000);
    single.m = 1;
    single.stage_cuts = {};
    for (long t : {0L, 40000L, 79999L}) CHECK(active_pool_size(t, single, n) == n);
}

TEST_CASE("pools are cumulative") {
    CurriculumConfig c = make_config(Strategy::batches, 1.0, 5e-5, 2000);
    c.m = 4;
    c.stage_cuts = {400, 900, 1500};
    const long n = 1003;
    long prev = 0;
    for (long t = 0; t < 2000; t += 50) {
        const long pool = active_pool_size(t, c, n);
        CHECK(pool >= prev);
        prev = pool;
    }
    CHECK(prev == n);
}

TEST_CASE("plans expose the per-strategy sampling view") {
    const DifficultyScores scores{{0.9, -1.0, 0.1, -0.4, 1.0, 0.5}};
    const auto ranking = rank_by_difficulty(scores);

    const CurriculumConfig none = make_config(Strategy::none, 1.0, 5e-4, 2000);
    const IterationPlan base = plan_for_iteration(0, none, scores, ranking);
    CHECK(base.eligible == 6);
    CHECK(base.probabilities.empty());
    CHECK(base.weights.empty());

    CurriculumConfig batches = make_config(Strategy::batches, 1.0, 5e-4, 2000);
    batches.stage_cuts = {300, 500};
    const IterationPlan early = plan_for_iteration(0, batches, scores, ranking);
    CHECK(early.eligible == 2);  // ceil(6/3)
    // Step-function correspondence: uniform over the easiest pool, zero
    // elsewhere, following the difficulty ranking.
    std::vector<double> implied(scores.s.size(), 0.0);
    for (long i = 0; i < early.eligible; ++i) implied[ranking[i]] = 1.0 / early.eligible;
    CHECK(implied[1] == 0.5);  // s=-1.0
    CHECK(implied[3] == 0.5);  // s=-0.4
    CHECK(implied[4] == 0.0);  // s=+1.0

    const CurriculumConfig sampling = make_config(Strategy::sampling, 4.0, 5e-4, 2000);
    const IterationPlan late = plan_for_iteration(2000000, sampling, scores, ranking);
    for (double p : late.probabilities) {
        CHECK(std::abs(p - 1.0 / 6.0) < 1e-6);
    }

    const CurriculumConfig weighting = make_config(Strategy::weighting, 2.0, 5e-4, 2000);
    const IterationPlan wplan = plan_for_iteration(0, weighting, scores, ranking);
    CHECK(wplan.weights.size() == scores.s.size());
    CHECK(wplan.weights[1] == 3.0);
}

TEST_CASE("config validation") {
    CurriculumConfig c = make_config(Strategy::batches, 1.0, 5e-5, 1000);
    c.stage_cuts = {500, 400};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.stage_cuts = {400, 1000};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.stage_cuts = {400, 900};
    CHECK_NOTHROW(c.validate());
    c.k = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}
