#include "cugan/gan.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

#include "cugan/errors.hpp"

namespace cugan {
namespace {

double softplus(double x) {
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

void check_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw DivergedError(std::string("training diverged: non-finite ") + what);
        }
    }
}

Matrix gaussian_matrix(int rows, int cols, RngStream& rng) {
    Matrix m(rows, cols);
    for (double& x : m.data) x = rng.gaussian();
    return m;
}

std::vector<Activation> hidden_activations(std::size_t n_hidden, Activation hidden,
                                           Activation output) {
    std::vector<Activation> acts(n_hidden, hidden);
    acts.push_back(output);
    return acts;
}

} // namespace

void GanConfig::validate() const {
    if (batch_size < 1) throw ConfigError("gan: batch_size must be >= 1");
    if (total_iterations < 0) throw ConfigError("gan: total_iterations must be >= 0");
    if (d_steps_per_g_step < 1) throw ConfigError("gan: d_steps_per_g_step must be >= 1");
    if (noise_dim < 1) throw ConfigError("gan: noise_dim must be >= 1");
    if (eval_every < 1) throw ConfigError("gan: eval_every must be >= 1");
    if (eval_samples < 256) throw ConfigError("gan: eval_samples must be >= 256");
    if (sw_projections < 1) throw ConfigError("gan: sw_projections must be >= 1");
    if (!(adam.lr > 0.0)) throw ConfigError("gan: learning rate must be > 0");
}

DiscriminatorLoss discriminator_loss(std::span<const double> real_out,
                                     std::span<const double> fake_out,
                                     std::span<const double> weights, LossKind kind,
                                     WeightingMode mode) {
    assert(weights.size() == real_out.size());
    check_finite(real_out, "discriminator output on real samples");
    check_finite(fake_out, "discriminator output on fake samples");

    DiscriminatorLoss loss;
    loss.real_grad.assign(real_out.size(), 0.0);
    loss.fake_grad.assign(fake_out.size(), 0.0);

    const double n_real = static_cast<double>(real_out.size());
    double weight_sum = 0.0;
    double real_acc = 0.0;
    for (std::size_t i = 0; i < real_out.size(); ++i) {
        const double y = real_out[i];
        double term, dterm;
        if (kind == LossKind::hinge) {
            term = std::max(0.0, 1.0 - y);
            dterm = y < 1.0 ? -1.0 : 0.0;
        } else {
            term = softplus(-y);
            dterm = sigmoid(y) - 1.0;
        }
        // Additive mode keeps the gradient path of the unit-weight loss and
        // only shifts the value; see the mode handling below.
        const double scale = mode == WeightingMode::multiplicative ? weights[i] : 1.0;
        real_acc += scale * term;
        loss.real_grad[i] = scale * dterm / n_real;
        weight_sum += weights[i];
    }
    loss.mean_weight = real_out.empty() ? 1.0 : weight_sum / n_real;
    loss.real_term = real_out.empty() ? 0.0 : real_acc / n_real;
    if (mode == WeightingMode::additive && !real_out.empty()) {
        loss.real_term += loss.mean_weight;
    }

    double fake_acc = 0.0;
    const double n_fake = static_cast<double>(fake_out.size());
    for (std::size_t j = 0; j < fake_out.size(); ++j) {
        const double y = fake_out[j];
        if (kind == LossKind::hinge) {
            fake_acc += std::max(0.0, 1.0 + y);
            loss.fake_grad[j] = (y > -1.0 ? 1.0 : 0.0) / n_fake;
        } else {
            fake_acc += softplus(y);
            loss.fake_grad[j] = sigmoid(y) / n_fake;
        }
    }
    loss.fake_term = fake_out.empty() ? 0.0 : fake_acc / n_fake;
    loss.total = loss.real_term + loss.fake_term;
    return loss;
}

GeneratorLoss generator_loss(std::span<const double> fake_out, LossKind kind) {
    if (fake_out.empty()) throw ConfigError("generator_loss: empty fake batch");
    check_finite(fake_out, "discriminator output in the generator objective");
    GeneratorLoss loss;
    loss.grad.assign(fake_out.size(), 0.0);
    const double n = static_cast<double>(fake_out.size());
    for (std::size_t j = 0; j < fake_out.size(); ++j) {
        if (kind == LossKind::hinge) {
            loss.value -= fake_out[j] / n;
            loss.grad[j] = -1.0 / n;
        } else {
            loss.value += softplus(-fake_out[j]) / n;
            loss.grad[j] = (sigmoid(fake_out[j]) - 1.0) / n;
        }
    }
    return loss;
}

std::string runlog_to_csv(const RunLog& log) {
    std::string out =
        "iteration,d_loss_real,d_loss_fake,g_loss,mean_weight,"
        "sliced_wasserstein,mode_coverage,hq_fraction\n";
    char buf[256];
    for (const RunRecord& r : log) {
        std::snprintf(buf, sizeof buf, "%ld,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                      r.iteration, r.d_loss_real, r.d_loss_fake, r.g_loss, r.mean_weight,
                      r.sliced_wasserstein, r.mode_coverage, r.hq_fraction);
        out += buf;
    }
    return out;
}

Trainer::Trainer(GanConfig config, CurriculumConfig curriculum, const Dataset& dataset,
                 DifficultyScores scores)
    : config_(std::move(config)),
      curriculum_(std::move(curriculum)),
      dataset_(&dataset),
      scores_(std::move(scores)),
      noise_rng_{config_.seed, 2},
      sampler_rng_{config_.seed, 3} {
    config_.validate();
    curriculum_.total_iterations = config_.total_iterations;
    curriculum_.validate();
    if (scores_.size() != dataset_->size()) {
        throw ConfigError("trainer: score count does not match dataset size");
    }
    ranking_ = rank_by_difficulty(scores_);

    RngStream init_rng{config_.seed, 1};
    std::vector<int> g_dims = {config_.noise_dim};
    g_dims.insert(g_dims.end(), config_.g_hidden.begin(), config_.g_hidden.end());
    g_dims.push_back(dataset_->dim());
    generator_ = make_mlp(g_dims,
                          hidden_activations(config_.g_hidden.size(), Activation::tanh_act,
                                             Activation::identity),
                          false, init_rng);

    std::vector<int> d_dims = {dataset_->dim()};
    d_dims.insert(d_dims.end(), config_.d_hidden.begin(), config_.d_hidden.end());
    d_dims.push_back(1);
    discriminator_ = make_mlp(d_dims,
                              hidden_activations(config_.d_hidden.size(),
                                                 Activation::leaky_relu,
                                                 Activation::identity),
                              config_.spectral_norm, init_rng);
    sn_ = SpectralNormState::init(discriminator_, init_rng);

    g_adam_ = AdamState(generator_, config_.adam);
    d_adam_ = AdamState(discriminator_, config_.adam);

    RngStream bank_rng{config_.seed, 4};
    noise_bank_ = gaussian_matrix(config_.eval_samples, config_.noise_dim, bank_rng);
}

void Trainer::set_index_observer(std::function<void(long, std::span<const int>)> fn) {
    index_observer_ = std::move(fn);
}

std::vector<int> Trainer::draw_real_indices(const IterationPlan& plan) {
    std::vector<int> idx(static_cast<std::size_t>(config_.batch_size));
    if (plan.uses_probabilities()) {
        idx = draw_indices(plan.probabilities, config_.batch_size, sampler_rng_);
    } else if (plan.strategy == Strategy::batches) {
        const int pool = static_cast<int>(plan.eligible);
        for (int& i : idx) i = ranking_[sampler_rng_.uniform_int(pool)];
    } else {
        const int n = dataset_->size();
        for (int& i : idx) i = sampler_rng_.uniform_int(n);
    }
    return idx;
}

StepReport Trainer::step() {
    if (t_ >= config_.total_iterations) {
        throw ConfigError("trainer: all iterations already run");
    }
    const IterationPlan plan = plan_for_iteration(t_, curriculum_, scores_, ranking_);
    const int batch = config_.batch_size;
    StepReport report;

    std::vector<double> batch_weights_buf(static_cast<std::size_t>(batch), 1.0);
    for (int sub = 0; sub < config_.d_steps_per_g_step; ++sub) {
        sn_.power_iterate(discriminator_);

        const std::vector<int> real_idx = draw_real_indices(plan);
        if (index_observer_) index_observer_(t_, real_idx);

        Matrix real_batch(batch, dataset_->dim());
        for (int i = 0; i < batch; ++i) {
            const auto src = dataset_->samples.row(real_idx[i]);
            std::copy(src.begin(), src.end(), real_batch.row(i).begin());
        }
        if (plan.strategy == Strategy::weighting) {
            for (int i = 0; i < batch; ++i) batch_weights_buf[i] = plan.weights[real_idx[i]];
        }

        const Matrix z = gaussian_matrix(batch, config_.noise_dim, noise_rng_);
        const Matrix fake_batch = forward(generator_, z, nullptr);

        ForwardCache real_cache, fake_cache;
        const Matrix real_out = forward(discriminator_, real_batch, &sn_, &real_cache);
        const Matrix fake_out = forward(discriminator_, fake_batch, &sn_, &fake_cache);

        const DiscriminatorLoss dl = discriminator_loss(
            real_out.data, fake_out.data, batch_weights_buf, config_.loss_kind,
            plan.weighting_mode);

        Matrix real_out_grad(batch, 1);
        real_out_grad.data = dl.real_grad;
        Matrix fake_out_grad(batch, 1);
        fake_out_grad.data = dl.fake_grad;

        Gradients d_grads = backward(discriminator_, real_cache, real_out_grad, &sn_);
        const Gradients d_grads_fake = backward(discriminator_, fake_cache, fake_out_grad, &sn_);
        for (std::size_t l = 0; l < d_grads.weight.size(); ++l) {
            for (std::size_t i = 0; i < d_grads.weight[l].data.size(); ++i) {
                d_grads.weight[l].data[i] += d_grads_fake.weight[l].data[i];
            }
            for (std::size_t i = 0; i < d_grads.bias[l].size(); ++i) {
                d_grads.bias[l][i] += d_grads_fake.bias[l][i];
            }
        }
        d_adam_.step(discriminator_, d_grads);

        report.d_loss_real = dl.real_term;
        report.d_loss_fake = dl.fake_term;
        report.mean_weight = dl.mean_weight;
    }

    const Matrix z = gaussian_matrix(config_.batch_size, config_.noise_dim, noise_rng_);
    ForwardCache g_cache, d_cache;
    const Matrix fake_batch = forward(generator_, z, nullptr, &g_cache);
    const Matrix fake_out = forward(discriminator_, fake_batch, &sn_, &d_cache);
    const GeneratorLoss gl = generator_loss(fake_out.data, config_.loss_kind);

    Matrix fake_out_grad(config_.batch_size, 1);
    fake_out_grad.data = gl.grad;
    const Gradients through_d = backward(discriminator_, d_cache, fake_out_grad, &sn_);
    const Gradients g_grads = backward(generator_, g_cache, through_d.input, nullptr);
    g_adam_.step(generator_, g_grads);

    report.g_loss = gl.value;
    if (!std::isfinite(report.g_loss) || !std::isfinite(report.d_loss_real) ||
        !std::isfinite(report.d_loss_fake)) {
        throw DivergedError("training diverged: non-finite loss at iteration " +
                            std::to_string(t_));
    }
    ++t_;
    return report;
}

Matrix Trainer::generate(const Matrix& noise) const {
    return forward(generator_, noise, nullptr);
}

Matrix Trainer::generate_from_bank() const { return generate(noise_bank_); }

MetricReport Trainer::evaluate() const {
    const Matrix fake = generate_from_bank();
    MetricReport r;
    // Seeded per evaluation so every strategy sees the same projections and
    // the same real subsample at the same iteration.
    RngStream metric_rng{config_.seed, 5, static_cast<std::uint64_t>(t_)};
    r.sliced_wasserstein =
        sliced_wasserstein(dataset_->samples, fake, config_.sw_projections, metric_rng);
    if (dataset_->meta) {
        r.mode_coverage = mode_coverage(fake, *dataset_->meta, config_.hq_threshold);
        r.hq_fraction = hq_fraction(fake, *dataset_->meta, config_.hq_threshold);
    } else {
        r.mode_coverage = std::nan("");
        r.hq_fraction = std::nan("");
    }
    return r;
}

const RunLog& Trainer::train() {
    while (t_ < config_.total_iterations) {
        const StepReport rep = step();
        if (t_ % config_.eval_every == 0 || t_ == config_.total_iterations) {
            const MetricReport metrics = evaluate();
            log_.push_back(RunRecord{t_, rep.d_loss_real, rep.d_loss_fake, rep.g_loss,
                                     rep.mean_weight, metrics.sliced_wasserstein,
                                     metrics.mode_coverage, metrics.hq_fraction});
        }
    }
    return log_;
}

} // namespace cugan
