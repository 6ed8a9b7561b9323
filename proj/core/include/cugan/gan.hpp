#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cugan/adam.hpp"
#include "cugan/curriculum.hpp"
#include "cugan/data.hpp"
#include "cugan/difficulty.hpp"
#include "cugan/metrics.hpp"
#include "cugan/mlp.hpp"
#include "cugan/rng.hpp"
#include "cugan/spectral_norm.hpp"

namespace cugan {

enum class LossKind { hinge, cross_entropy };

struct GanConfig {
    LossKind loss_kind = LossKind::hinge;
    int batch_size = 64;
    long total_iterations = 20000;
    int d_steps_per_g_step = 1;
    int noise_dim = 8;
    std::vector<int> g_hidden = {64, 64};
    std::vector<int> d_hidden = {64, 64};
    bool spectral_norm = true;
    AdamConfig adam;
    long eval_every = 100;
    int eval_samples = 2048;
    int sw_projections = 128;
    double hq_threshold = 3.0;  // sigma multiples for coverage / hq metrics
    std::uint64_t seed = 1;

    void validate() const;
};

/// Discriminator loss with gradients w.r.t. the raw outputs.
///
/// hinge: mean max(0, 1 - D(x)) over real plus mean max(0, 1 + D(G(z))) over
/// fake; cross-entropy uses the softplus forms. In multiplicative mode the
/// per-sample real terms are scaled by weights; in additive mode mean(w) is
/// added after the unscaled real term, which leaves every gradient unchanged.
struct DiscriminatorLoss {
    double total = 0.0;
    double real_term = 0.0;
    double fake_term = 0.0;
    double mean_weight = 1.0;
    std::vector<double> real_grad;
    std::vector<double> fake_grad;
};

DiscriminatorLoss discriminator_loss(std::span<const double> real_out,
                                     std::span<const double> fake_out,
                                     std::span<const double> weights, LossKind kind,
                                     WeightingMode mode);

struct GeneratorLoss {
    double value = 0.0;
    std::vector<double> grad;
};

/// hinge: -mean(D(G(z))); cross-entropy: non-saturating -mean(log sigmoid(D)).
GeneratorLoss generator_loss(std::span<const double> fake_out, LossKind kind);

struct StepReport {
    double d_loss_real = 0.0;
    double d_loss_fake = 0.0;
    double g_loss = 0.0;
    double mean_weight = 1.0;
};

struct RunRecord {
    long iteration = 0;
    double d_loss_real = 0.0;
    double d_loss_fake = 0.0;
    double g_loss = 0.0;
    double mean_weight = 1.0;
    double sliced_wasserstein = 0.0;
    double mode_coverage = 0.0;
    double hq_fraction = 0.0;
};

using RunLog = std::vector<RunRecord>;

std::string runlog_to_csv(const RunLog& log);

/// Alternating minimax trainer. Owns both networks, their optimizer state and
/// the rng streams; one instance per seed, never shared across threads.
class Trainer {
public:
    /// The dataset must outlive the trainer; it is shared immutable state.
    Trainer(GanConfig config, CurriculumConfig curriculum, const Dataset& dataset,
            DifficultyScores scores);

    /// One iteration: d_steps_per_g_step discriminator updates then one
    /// generator update. Throws DivergedError on non-finite values.
    StepReport step();

    /// Runs the remaining iterations, evaluating every eval_every steps on
    /// the frozen noise bank. Returns the accumulated log (also kept on the
    /// trainer so partial results survive an abort).
    const RunLog& train();

    MetricReport evaluate() const;
    Matrix generate(const Matrix& noise) const;
    Matrix generate_from_bank() const;

    long iteration() const { return t_; }
    const Mlp& generator() const { return generator_; }
    const Mlp& discriminator() const { return discriminator_; }
    const RunLog& log() const { return log_; }
    const GanConfig& config() const { return config_; }

    /// Test hook: observes the real indices drawn for every D sub-update.
    void set_index_observer(std::function<void(long, std::span<const int>)> fn);

private:
    std::vector<int> draw_real_indices(const IterationPlan& plan);

    GanConfig config_;
    CurriculumConfig curriculum_;
    const Dataset* dataset_;
    DifficultyScores scores_;
    std::vector<int> ranking_;

    Mlp generator_;
    Mlp discriminator_;
    AdamState g_adam_;
    AdamState d_adam_;
    SpectralNormState sn_;

    RngStream noise_rng_;
    RngStream sampler_rng_;
    Matrix noise_bank_;

    long t_ = 0;
    RunLog log_;
    std::function<void(long, std::span<const int>)> index_observer_;
};

} // namespace cugan
