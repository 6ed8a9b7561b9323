// Experiment runner for curriculum GAN training on synthetic 2-D mixtures.
//
// Subcommands:
//   run           train one strategy over a list of seeds
//   compare       train several strategies on a shared budget and rank them
//   dump-weights  easiness-weight decay curves as CSV + SVG
//   dump-dataset  materialize a synthetic dataset as CSV (optionally + scores)

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cugan/errors.hpp"
#include "cugan/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
    std::string dataset = "ring:8,2,0.05";
    std::uint64_t dataset_seed = 42;
    std::string scores = "analytic";
    std::string proxy = "euclidean";
    std::string out_dir;
    std::vector<std::uint64_t> seeds = {1};
    long iters = 20000;
    long eval_every = 100;
    std::string loss = "hinge";
    int batch_size = 64;
    int d_steps = 1;
    int noise_dim = 8;
    double lr = 2e-4;
    double beta1 = 0.5;
    double beta2 = 0.999;
    int eval_samples = 2048;
    int sw_projections = 128;
    bool no_spectral_norm = false;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--dataset", opt.dataset,
                    "ring:<modes>,<radius>,<sigma>[,<per_mode>] | "
                    "graded:<modes>,<radius>,<smin>,<smax>[,<per_mode>] | csv:<path>");
    cmd->add_option("--dataset-seed", opt.dataset_seed, "seed for synthetic data generation");
    cmd->add_option("--scores", opt.scores,
                    "difficulty source: 'analytic', 'constant' or a score file path");
    cmd->add_option("--difficulty-proxy", opt.proxy, "euclidean | mahalanobis")
        ->check(CLI::IsMember({"euclidean", "mahalanobis"}));
    cmd->add_option("--out", opt.out_dir, "output directory")->required();
    cmd->add_option("--seeds", opt.seeds, "comma-separated training seeds")->delimiter(',');
    cmd->add_option("--iters", opt.iters, "total training iterations");
    cmd->add_option("--eval-every", opt.eval_every, "metric evaluation cadence");
    cmd->add_option("--loss", opt.loss, "hinge | cross-entropy")
        ->check(CLI::IsMember({"hinge", "cross-entropy"}));
    cmd->add_option("--batch-size", opt.batch_size);
    cmd->add_option("--d-steps", opt.d_steps, "discriminator updates per generator update");
    cmd->add_option("--noise-dim", opt.noise_dim);
    cmd->add_option("--lr", opt.lr, "Adam learning rate");
    cmd->add_option("--beta1", opt.beta1);
    cmd->add_option("--beta2", opt.beta2);
    cmd->add_option("--eval-samples", opt.eval_samples, "frozen noise bank size");
    cmd->add_option("--sw-projections", opt.sw_projections);
    cmd->add_flag("--no-spectral-norm", opt.no_spectral_norm,
                  "disable spectral normalization of the discriminator");
}

cugan::ExperimentSpec build_spec(const CommonOptions& opt) {
    cugan::ExperimentSpec spec;
    spec.dataset = cugan::DatasetSpec::parse(opt.dataset);
    spec.dataset.seed = opt.dataset_seed;
    spec.scores.proxy = opt.proxy == "mahalanobis" ? cugan::DifficultyProxy::mahalanobis
                                                   : cugan::DifficultyProxy::euclidean;
    if (opt.scores == "analytic") {
        spec.scores.kind = cugan::ScoreSource::Kind::analytic;
    } else if (opt.scores == "constant") {
        spec.scores.kind = cugan::ScoreSource::Kind::constant;
    } else {
        spec.scores.kind = cugan::ScoreSource::Kind::file;
        spec.scores.path = opt.scores;
    }
    spec.gan.loss_kind = opt.loss == "hinge" ? cugan::LossKind::hinge
                                             : cugan::LossKind::cross_entropy;
    spec.gan.batch_size = opt.batch_size;
    spec.gan.total_iterations = opt.iters;
    spec.gan.d_steps_per_g_step = opt.d_steps;
    spec.gan.noise_dim = opt.noise_dim;
    spec.gan.adam.lr = opt.lr;
    spec.gan.adam.beta1 = opt.beta1;
    spec.gan.adam.beta2 = opt.beta2;
    spec.gan.eval_every = opt.eval_every;
    spec.gan.eval_samples = opt.eval_samples;
    spec.gan.sw_projections = opt.sw_projections;
    spec.gan.spectral_norm = !opt.no_spectral_norm;
    spec.seeds = opt.seeds;
    if (spec.seeds.empty()) throw cugan::ConfigError("--seeds must list at least one seed");
    spec.out_dir = opt.out_dir;
    return spec;
}

int classify_failure(const cugan::RunOutputs& outputs) {
    for (const cugan::SeedResult& r : outputs.seeds) {
        if (!r.ok) {
            std::fprintf(stderr, "cugan: seed %llu failed (%s): %s\n",
                         static_cast<unsigned long long>(r.seed), r.error_kind.c_str(),
                         r.error.c_str());
            if (r.error_kind == "diverged") return kExitDiverged;
            if (r.error_kind == "io" || r.error_kind == "data") return kExitIo;
            return kExitConfig;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curriculum GAN experiment runner"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    std::string run_strategy = "none";
    double run_k = 0.0;
    double run_gamma = 0.0;
    int run_m = 3;
    std::vector<long> run_cuts;
    std::string run_mode = "multiplicative";
    CLI::App* run_cmd = app.add_subcommand("run", "train one strategy");
    add_common_options(run_cmd, run_opt);
    run_cmd->add_option("--strategy", run_strategy, "none | batches | weighting | sampling")
        ->check(CLI::IsMember({"none", "batches", "weighting", "sampling"}));
    run_cmd->add_option("--k", run_k, "difficulty impact (0 = per-strategy default)");
    run_cmd->add_option("--gamma", run_gamma, "weight decay rate (0 = 10/iters)");
    run_cmd->add_option("--m", run_m, "batch count for the batches strategy");
    run_cmd->add_option("--stage-cuts", run_cuts, "iteration thresholds a,b,...")
        ->delimiter(',');
    run_cmd->add_option("--weighting-mode", run_mode, "additive | multiplicative")
        ->check(CLI::IsMember({"additive", "multiplicative"}));

    CommonOptions cmp_opt;
    std::vector<std::string> cmp_strategies = {"none", "batches", "weighting", "sampling"};
    double cmp_weighting_k = 0.0;
    double cmp_sampling_k = 0.0;
    double cmp_gamma = 0.0;
    int cmp_m = 3;
    std::vector<long> cmp_cuts;
    std::string cmp_mode = "multiplicative";
    CLI::App* cmp_cmd =
        app.add_subcommand("compare", "run several strategies on a shared budget");
    add_common_options(cmp_cmd, cmp_opt);
    cmp_cmd->add_option("--strategies", cmp_strategies,
                        "ordered list; the first entry is the baseline")
        ->delimiter(',');
    cmp_cmd->add_option("--weighting-k", cmp_weighting_k, "k for the weighting run (0 = 2)");
    cmp_cmd->add_option("--sampling-k", cmp_sampling_k, "k for the sampling run (0 = 4)");
    cmp_cmd->add_option("--gamma", cmp_gamma, "weight decay rate (0 = 10/iters)");
    cmp_cmd->add_option("--m", cmp_m);
    cmp_cmd->add_option("--stage-cuts", cmp_cuts)->delimiter(',');
    cmp_cmd->add_option("--weighting-mode", cmp_mode)
        ->check(CLI::IsMember({"additive", "multiplicative"}));

    std::string dw_out;
    double dw_k = 1.0;
    double dw_gamma = 5e-5;
    long dw_t_max = 0;
    int dw_points = 200;
    std::vector<double> dw_scores;
    std::string dw_score_file;
    CLI::App* dw_cmd = app.add_subcommand("dump-weights", "easiness-weight decay curves");
    dw_cmd->add_option("--out", dw_out)->required();
    dw_cmd->add_option("--k", dw_k);
    dw_cmd->add_option("--gamma", dw_gamma);
    dw_cmd->add_option("--t-max", dw_t_max, "grid end (0 = 10/gamma)");
    dw_cmd->add_option("--t-points", dw_points, "number of grid points");
    dw_cmd->add_option("--score-values", dw_scores, "difficulty scores (default: -1..1 grid)")
        ->delimiter(',');
    dw_cmd->add_option("--scores", dw_score_file, "score file to read raw scores from");

    std::string dd_dataset = "ring:8,2,0.05";
    std::uint64_t dd_seed = 42;
    std::string dd_out;
    std::string dd_proxy = "euclidean";
    bool dd_with_scores = false;
    CLI::App* dd_cmd = app.add_subcommand("dump-dataset", "materialize a synthetic dataset");
    dd_cmd->add_option("--dataset", dd_dataset)->required();
    dd_cmd->add_option("--dataset-seed", dd_seed);
    dd_cmd->add_option("--out", dd_out)->required();
    dd_cmd->add_option("--difficulty-proxy", dd_proxy)
        ->check(CLI::IsMember({"euclidean", "mahalanobis"}));
    dd_cmd->add_flag("--with-scores", dd_with_scores, "also write analytic raw scores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run_cmd->parsed()) {
            cugan::ExperimentSpec spec = build_spec(run_opt);
            spec.curriculum.strategy = cugan::strategy_from_name(run_strategy);
            spec.curriculum.k = run_k;
            spec.curriculum.gamma = run_gamma;
            spec.curriculum.m = run_m;
            spec.curriculum.stage_cuts = run_cuts;
            spec.curriculum.weighting_mode = cugan::weighting_mode_from_name(run_mode);
            return classify_failure(cugan::run_experiment(spec));
        }
        if (cmp_cmd->parsed()) {
            std::vector<std::pair<std::string, cugan::ExperimentSpec>> specs;
            for (const std::string& name : cmp_strategies) {
                cugan::ExperimentSpec spec = build_spec(cmp_opt);
                spec.curriculum.strategy = cugan::strategy_from_name(name);
                spec.curriculum.gamma = cmp_gamma;
                spec.curriculum.m = cmp_m;
                spec.curriculum.stage_cuts = cmp_cuts;
                spec.curriculum.weighting_mode = cugan::weighting_mode_from_name(cmp_mode);
                if (spec.curriculum.strategy == cugan::Strategy::weighting) {
                    spec.curriculum.k = cmp_weighting_k;
                } else if (spec.curriculum.strategy == cugan::Strategy::sampling) {
                    spec.curriculum.k = cmp_sampling_k;
                }
                specs.emplace_back(name, std::move(spec));
            }
            cugan::compare_experiments(specs, cmp_opt.out_dir);
            return kExitOk;
        }
        if (dw_cmd->parsed()) {
            std::vector<double> scores = dw_scores;
            if (!dw_score_file.empty()) {
                scores = cugan::load_score_file(dw_score_file).values;
            }
            if (scores.empty()) {
                for (int i = 0; i <= 8; ++i) scores.push_back(-1.0 + 0.25 * i);
            }
            const long t_max =
                dw_t_max > 0 ? dw_t_max : static_cast<long>(std::ceil(10.0 / dw_gamma));
            if (dw_points < 2) throw cugan::ConfigError("--t-points must be >= 2");
            std::vector<long> grid;
            for (int i = 0; i < dw_points; ++i) {
                grid.push_back(static_cast<long>(
                    static_cast<double>(t_max) * i / (dw_points - 1)));
            }
            cugan::dump_weights(scores, dw_k, dw_gamma, grid, dw_out);
            return kExitOk;
        }
        if (dd_cmd->parsed()) {
            cugan::DatasetSpec spec = cugan::DatasetSpec::parse(dd_dataset);
            spec.seed = dd_seed;
            const auto proxy = dd_proxy == "mahalanobis"
                                   ? cugan::DifficultyProxy::mahalanobis
                                   : cugan::DifficultyProxy::euclidean;
            cugan::dump_dataset(spec, proxy, dd_with_scores, dd_out);
            return kExitOk;
        }
    } catch (const cugan::DivergedError& e) {
        std::fprintf(stderr, "cugan: %s\n", e.what());
        return kExitDiverged;
    } catch (const cugan::ConfigError& e) {
        std::fprintf(stderr, "cugan: %s\n", e.what());
        return kExitConfig;
    } catch (const cugan::IoError& e) {
        std::fprintf(stderr, "cugan: %s\n", e.what());
        return kExitIo;
    } catch (const cugan::DataError& e) {
        std::fprintf(stderr, "cugan: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "cugan: %s\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
