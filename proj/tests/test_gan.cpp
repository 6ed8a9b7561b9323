#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "cugan/checkpoint.hpp"
#include "cugan/errors.hpp"
#include "cugan/gan.hpp"

using namespace cugan;

namespace {

GanConfig small_gan(long iters, std::uint64_t seed) {
    GanConfig g;
    g.total_iterations = iters;
    g.batch_size = 16;
    g.g_hidden = {16, 16};
    g.d_hidden = {16, 16};
    g.eval_every = iters > 0 ? iters : 1;
    g.eval_samples = 256;
    g.sw_projections = 16;
    g.seed = seed;
    return g;
}

CurriculumConfig curriculum_for(Strategy strategy, double k, double gamma, long total,
                                std::vector<long> cuts = {}) {
    CurriculumConfig c;
    c.strategy = strategy;
    c.k = k;
    c.gamma = gamma;
    c.total_iterations = total;
    c.stage_cuts = std::move(cuts);
    if (strategy == Strategy::batches && c.stage_cuts.empty()) {
        c.stage_cuts = {total * 3 / 16, total * 5 / 16};
    }
    return c;
}

} // namespace

TEST_CASE("hinge discriminator loss is zero when margins are satisfied") {
    const std::vector<double> real = {1.0, 1.0, 2.5};
    const std::vector<double> fake = {-1.0, -3.0};
    const std::vector<double> w = {1.0, 1.0, 1.0};
    const DiscriminatorLoss loss =
        discriminator_loss(real, fake, w, LossKind::hinge, WeightingMode::multiplicative);
    CHECK(loss.total == 0.0);
    CHECK(loss.real_term == 0.0);
    CHECK(loss.fake_term == 0.0);
}

TEST_CASE("multiplicative weights scale the real hinge term") {
    const std::vector<double> real = {0.0};
    const std::vector<double> fake = {};
    const std::vector<double> w = {2.0};
    const DiscriminatorLoss loss =
        discriminator_loss(real, fake, w, LossKind::hinge, WeightingMode::multiplicative);
    CHECK(loss.real_term == 2.0);
    CHECK(loss.real_grad[0] == -2.0);
}

TEST_CASE("additive mode shifts the value but not the gradients") {
    RngStream rng{21};
    for (LossKind kind : {LossKind::hinge, LossKind::cross_entropy}) {
        std::vector<double> real(8), fake(8), w(8), unit(8, 1.0);
        for (auto* v : {&real, &fake}) {
            for (double& x : *v) x = rng.gaussian();
        }
        for (double& x : w) x = 0.5 + rng.uniform();

        const DiscriminatorLoss weighted =
            discriminator_loss(real, fake, w, kind, WeightingMode::additive);
        const DiscriminatorLoss plain =
            discriminator_loss(real, fake, unit, kind, WeightingMode::multiplicative);
        double mean_w = 0.0;
        for (double x : w) mean_w += x / 8.0;
        CHECK(weighted.total == doctest::Approx(plain.total + mean_w).epsilon(1e-12));
        for (std::size_t i = 0; i < real.size(); ++i) {
            CHECK(weighted.real_grad[i] == plain.real_grad[i]);
            CHECK(weighted.fake_grad[i] == plain.fake_grad[i]);
        }
    }
}

TEST_CASE("the fake term never depends on weights or weighting mode") {
    RngStream rng{22};
    std::vector<double> real(6), fake(6), w1(6), w2(6, 1.0);
    for (auto* v : {&real, &fake}) {
        for (double& x : *v) x = rng.gaussian();
    }
    for (double& x : w1) x = 3.0 * rng.uniform();
    for (LossKind kind : {LossKind::hinge, LossKind::cross_entropy}) {
        const auto a = discriminator_loss(real, fake, w1, kind, WeightingMode::multiplicative);
        const auto b = discriminator_loss(real, fake, w1, kind, WeightingMode::additive);
        const auto c = discriminator_loss(real, fake, w2, kind, WeightingMode::multiplicative);
        CHECK(a.fake_term == b.fake_term);
        CHECK(a.fake_term == c.fake_term);
        CHECK(a.fake_grad == b.fake_grad);
        CHECK(a.fake_grad == c.fake_grad);
    }
}

TEST_CASE("generator loss closed forms") {
    CHECK(generator_loss(std::vector<double>{0.0, 0.0}, LossKind::hinge).value == 0.0);
    CHECK(generator_loss(std::vector<double>{1.0, 3.0}, LossKind::hinge).value ==
          doctest::Approx(-2.0).epsilon(1e-15));
    // Saturation: softplus(-40) is ~4e-18.
    CHECK(generator_loss(std::vector<double>{40.0, 45.0}, LossKind::cross_entropy).value <
          1e-12);
    CHECK_THROWS_AS(static_cast<void>(generator_loss({}, LossKind::hinge)), ConfigError);
}

TEST_CASE("non-finite discriminator outputs abort the run") {
    const std::vector<double> bad = {std::nan("")};
    const std::vector<double> ok = {0.0};
    const std::vector<double> w = {1.0};
    CHECK_THROWS_AS(static_cast<void>(discriminator_loss(bad, ok, w, LossKind::hinge,
                                                         WeightingMode::multiplicative)),
                    DivergedError);
    CHECK_THROWS_AS(static_cast<void>(generator_loss(bad, LossKind::hinge)), DivergedError);
}

TEST_CASE("baseline run is bit-identical to weighting with vanishing k") {
    const Dataset ds = make_ring_gmm(4, 1.0, 0.1, 30, 500);
    ScoreSource src;
    src.kind = ScoreSource::Kind::analytic;
    const DifficultyScores scores = resolve_scores(src, ds);

    Trainer baseline(small_gan(40, 9), curriculum_for(Strategy::none, 1.0, 5e-4, 40), ds,
                     scores);
    // k so small that 1 - k*s*exp(-gt) rounds to 1.0 exactly in binary64.
    Trainer weighted(small_gan(40, 9), curriculum_for(Strategy::weighting, 1e-30, 5e-4, 40),
                     ds, scores);
    baseline.train();
    weighted.train();
    CHECK(checkpoint_to_json(baseline.generator(), baseline.discriminator()) ==
          checkpoint_to_json(weighted.generator(), weighted.discriminator()));
    CHECK(runlog_to_csv(baseline.log()) == runlog_to_csv(weighted.log()));
}

TEST_CASE("additive weighting matches the baseline trajectory bit for bit") {
    const Dataset ds = make_ring_gmm(4, 1.0, 0.1, 30, 501);
    ScoreSource src;
    src.kind = ScoreSource::Kind::analytic;
    const DifficultyScores scores = resolve_scores(src, ds);

    CurriculumConfig additive = curriculum_for(Strategy::weighting, 2.0, 5e-4, 50);
    additive.weighting_mode = WeightingMode::additive;
    Trainer a(small_gan(50, 31), curriculum_for(Strategy::none, 1.0, 5e-4, 50), ds, scores);
    Trainer b(small_gan(50, 31), additive, ds, scores);
    a.train();
    b.train();
    CHECK(checkpoint_to_json(a.generator(), a.discriminator()) ==
          checkpoint_to_json(b.generator(), b.discriminator()));
}

TEST_CASE("batches strategy only draws from the active pool") {
    const Dataset ds = make_ring_gmm(6, 1.5, 0.1, 20, 502);  // n = 120
    ScoreSource src;
    src.kind = ScoreSource::Kind::analytic;
    const DifficultyScores scores = resolve_scores(src, ds);
    const auto ranking = rank_by_difficulty(scores);
    std::set<int> easiest_third(ranking.begin(), ranking.begin() + 40);

    Trainer trainer(small_gan(60, 77),
                    curriculum_for(Strategy::batches, 1.0, 5e-4, 60, {30, 45}), ds, scores);
    bool all_in_pool = true;
    trainer.set_index_observer([&](long t, std::span<const int> idx) {
        if (t >= 30) return;
        for (int i : idx) all_in_pool = all_in_pool && easiest_third.count(i) > 0;
    });
    trainer.train();
    CHECK(all_in_pool);
}

TEST_CASE("sampling with k=4 favors easy samples early") {
    const Dataset ds = make_ring_gmm(8, 2.0, 0.05, 50, 503);  // n = 400
    ScoreSource src;
    src.kind = ScoreSource::Kind::analytic;
    const DifficultyScores scores = resolve_scores(src, ds);
    const auto ranking = rank_by_difficulty(scores);
    std::set<int> easiest(ranking.begin(), ranking.begin() + 40);
    std::set<int> hardest(ranking.end() - 40, ranking.end());

    Trainer trainer(small_gan(200, 99), curriculum_for(Strategy::sampling, 4.0, 5e-3, 200),
                    ds, scores);
    long easy_hits = 0, hard_hits = 0;
    trainer.set_index_observer([&](long, std::span<const int> idx) {
        for (int i : idx) {
            if (easiest.count(i)) ++easy_hits;
            if (hardest.count(i)) ++hard_hits;
        }
    });
    trainer.train();
    CHECK(easy_hits > hard_hits);
}

TEST_CASE("zero-iteration runs leave everything untouched") {
    const Dataset ds = make_ring_gmm(4, 1.0, 0.1, 10, 504);
    ScoreSource src;
    src.kind = ScoreSource::Kind::constant;
    const DifficultyScores scores = resolve_scores(src, ds);
    Trainer trainer(small_gan(0, 1), curriculum_for(Strategy::none, 1.0, 5e-4, 0), ds, scores);
    const std::string before = checkpoint_to_json(trainer.generator(), trainer.discriminator());
    const RunLog& log = trainer.train();
    CHECK(log.empty());
    CHECK(checkpoint_to_json(trainer.generator(), trainer.discriminator()) == before);
}

TEST_CASE("identical seeds give identical runs, different seeds do not") {
    const Dataset ds = make_ring_gmm(4, 1.0, 0.1, 25, 505);
    ScoreSource src;
    src.kind = ScoreSource::Kind::analytic;
    const DifficultyScores scores = resolve_scores(src, ds);

    Trainer a(small_gan(30, 12), curriculum_for(Strategy::sampling, 4.0, 5e-4, 30), ds, scores);
    Trainer b(small_gan(30, 12), curriculum_for(Strategy::sampling, 4.0, 5e-4, 30), ds, scores);
    Trainer c(small_gan(30, 13), curriculum_for(Strategy::sampling, 4.0, 5e-4, 30), ds, scores);
    a.train();
    b.train();
    c.train();
    CHECK(runlog_to_csv(a.log()) == runlog_to_csv(b.log()));
    CHECK(checkpoint_to_json(a.generator(), a.discriminator()) ==
          checkpoint_to_json(b.generator(), b.discriminator()));
    CHECK(runlog_to_csv(a.log()) != runlog_to_csv(c.log()));
}

TEST_CASE("every logged loss stays finite across seeds and strategies") {
    const Dataset ds = make_ring_gmm(8, 2.0, 0.05, 25, 506);  // n = 200
    ScoreSource src;
    src.kind = ScoreSource::Kind::analytic;
    const DifficultyScores scores = resolve_scores(src, ds);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        for (Strategy strategy :
             {Strategy::none, Strategy::batches, Strategy::weighting, Strategy::sampling}) {
            const double k = strategy == Strategy::sampling ? 4.0 : 2.0;
            GanConfig g = small_gan(60, seed);
            g.eval_every = 20;
            Trainer trainer(g, curriculum_for(strategy, k, 5e-3, 60), ds, scores);
            for (const RunRecord& r : trainer.train()) {
                CHECK(std::isfinite(r.d_loss_real));
                CHECK(std::isfinite(r.d_loss_fake));
                CHECK(std::isfinite(r.g_loss));
                CHECK(std::isfinite(r.sliced_wasserstein));
            }
        }
    }
}

TEST_CASE("runlog csv has the documented columns") {
    RunLog log;
    log.push_back(RunRecord{100, 0.5, 0.25, -0.1, 1.0, 0.75, 1.0, 0.9});
    const std::string csv = runlog_to_csv(log);
    CHECK(csv.find("iteration,d_loss_real,d_loss_fake,g_loss,mean_weight,"
                   "sliced_wasserstein,mode_coverage,hq_fraction\n") == 0);
    CHECK(csv.find("100,0.5,0.25,-0.1,1,0.75,1,0.9\n") != std::string::npos);
}

TEST_CASE("checkpoints round-trip through json") {
    RngStream rng{88};
    const Mlp g = make_mlp({8, 16, 2}, {Activation::tanh_act, Activation::identity}, false, rng);
    const Mlp d = make_mlp({2, 16, 1}, {Activation::leaky_relu, Activation::identity}, true, rng);
    const std::string path = "/tmp/cugan_ckpt_test.json";
    save_checkpoint(g, d, path);
    const auto [g2, d2] = load_checkpoint(path);
    REQUIRE(g2.layers.size() == g.layers.size());
    for (std::size_t l = 0; l < g.layers.size(); ++l) {
        CHECK(g2.layers[l].weight.data == g.layers[l].weight.data);
        CHECK(g2.layers[l].bias == g.layers[l].bias);
        CHECK(g2.layers[l].activation == g.layers[l].activation);
    }
    CHECK(d2.layers[0].spectral_norm);
    CHECK(checkpoint_to_json(g2, d2) == checkpoint_to_json(g, d));
}
