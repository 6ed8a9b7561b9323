#include "cugan/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "cugan/checkpoint.hpp"
#include "cugan/errors.hpp"
#include "cugan/svg.hpp"

namespace fs = std::filesystem;

namespace cugan {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* kStrategyColors[] = {"#666666", "#1f77b4", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
        throw ConfigError("invalid " + what + ": '" + text + "'");
    }
    return v;
}

long parse_long(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0') {
        throw ConfigError("invalid " + what + ": '" + text + "'");
    }
    return v;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("write failed: " + path.string());
}

std::string format_double(double v, const char* pattern = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ordered_json json_number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

} // namespace

DatasetSpec DatasetSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ConfigError("dataset spec must look like ring:8,2,0.05 or csv:<path>, got '" +
                          text + "'");
    }
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    DatasetSpec spec;
    if (kind == "csv") {
        spec.kind = Kind::csv;
        spec.csv_path = rest;
        if (spec.csv_path.empty()) throw ConfigError("csv dataset spec needs a path");
        return spec;
    }
    const auto parts = split(rest, ',');
    if (kind == "ring") {
        spec.kind = Kind::ring;
        if (parts.size() < 3 || parts.size() > 4) {
            throw ConfigError("ring spec is ring:<modes>,<radius>,<sigma>[,<per_mode>]");
        }
        spec.n_modes = static_cast<int>(parse_long(parts[0], "ring modes"));
        spec.radius = parse_double(parts[1], "ring radius");
        spec.sigma = parse_double(parts[2], "ring sigma");
        if (parts.size() == 4) {
            spec.samples_per_mode = static_cast<int>(parse_long(parts[3], "ring per-mode count"));
        }
        return spec;
    }
    if (kind == "graded") {
        spec.kind = Kind::graded;
        if (parts.size() < 4 || parts.size() > 5) {
            throw ConfigError(
                "graded spec is graded:<modes>,<radius>,<sigma_min>,<sigma_max>[,<per_mode>]");
        }
        spec.n_modes = static_cast<int>(parse_long(parts[0], "graded modes"));
        spec.radius = parse_double(parts[1], "graded radius");
        spec.sigma_min = parse_double(parts[2], "graded sigma_min");
        spec.sigma_max = parse_double(parts[3], "graded sigma_max");
        if (parts.size() == 5) {
            spec.samples_per_mode = static_cast<int>(parse_long(parts[4], "graded per-mode count"));
        }
        return spec;
    }
    throw ConfigError("unknown dataset kind '" + kind + "'");
}

std::string DatasetSpec::describe() const {
    char buf[160];
    switch (kind) {
    case Kind::ring:
        std::snprintf(buf, sizeof buf, "ring:%d,%.10g,%.10g,%d", n_modes, radius, sigma,
                      samples_per_mode);
        return buf;
    case Kind::graded:
        std::snprintf(buf, sizeof buf, "graded:%d,%.10g,%.10g,%.10g,%d", n_modes, radius,
                      sigma_min, sigma_max, samples_per_mode);
        return buf;
    case Kind::csv:
        return "csv:" + csv_path;
    }
    return "";
}

Dataset DatasetSpec::build() const {
    switch (kind) {
    case Kind::ring:
        return make_ring_gmm(n_modes, radius, sigma, samples_per_mode, seed);
    case Kind::graded:
        return make_graded_mixture(n_modes, radius, sigma_min, sigma_max, samples_per_mode,
                                   seed);
    case Kind::csv:
        return load_csv_dataset(csv_path);
    }
    throw ConfigError("unknown dataset kind");
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "none") return Strategy::none;
    if (name == "batches") return Strategy::batches;
    if (name == "weighting") return Strategy::weighting;
    if (name == "sampling") return Strategy::sampling;
    throw ConfigError("unknown strategy '" + name + "'");
}

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::none: return "none";
    case Strategy::batches: return "batches";
    case Strategy::weighting: return "weighting";
    case Strategy::sampling: return "sampling";
    }
    return "none";
}

WeightingMode weighting_mode_from_name(const std::string& name) {
    if (name == "additive") return WeightingMode::additive;
    if (name == "multiplicative") return WeightingMode::multiplicative;
    throw ConfigError("unknown weighting mode '" + name + "'");
}

const char* weighting_mode_name(WeightingMode m) {
    return m == WeightingMode::additive ? "additive" : "multiplicative";
}

CurriculumConfig CurriculumOptions::resolve(long total_iterations) const {
    CurriculumConfig config;
    config.strategy = strategy;
    config.weighting_mode = weighting_mode;
    config.total_iterations = total_iterations;
    config.m = m;
    if (k > 0.0) {
        config.k = k;
    } else if (strategy == Strategy::weighting) {
        config.k = 2.0;
    } else if (strategy == Strategy::sampling) {
        config.k = 4.0;
    } else {
        config.k = 1.0;
    }
    if (gamma > 0.0) {
        config.gamma = gamma;
    } else if (total_iterations > 0) {
        config.gamma = 10.0 / static_cast<double>(total_iterations);
    } else {
        config.gamma = 5e-5;
    }
    if (!stage_cuts.empty()) {
        config.stage_cuts = stage_cuts;
    } else if (strategy == Strategy::batches && m == 3) {
        config.stage_cuts = {total_iterations * 3 / 16, total_iterations * 5 / 16};
    } else if (strategy == Strategy::batches && m > 1) {
        throw ConfigError("batches with m != 3 needs explicit --stage-cuts");
    }
    config.validate();
    return config;
}

int max_parallel_seeds() {
    if (const char* env = std::getenv("CUGAN_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            throw ConfigError("CUGAN_THREADS must be a positive integer, got '" +
                              std::string(env) + "'");
        }
        return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

bool RunOutputs::all_ok() const {
    return std::all_of(seeds.begin(), seeds.end(),
                       [](const SeedResult& r) { return r.ok; });
}

namespace {

struct SeedArtifacts {
    SeedResult result;
    Matrix final_fake;  // empty when the trainer never came up
};

SeedArtifacts run_single_seed(const ExperimentSpec& spec, const Dataset& dataset,
                              const DifficultyScores& scores,
                              const CurriculumConfig& curriculum, std::uint64_t seed) {
    SeedArtifacts art;
    art.result.seed = seed;
    GanConfig gan = spec.gan;
    gan.seed = seed;
    try {
        Trainer trainer(gan, curriculum, dataset, scores);
        try {
            trainer.train();
            art.result.ok = true;
        } catch (const DivergedError& e) {
            art.result.error = e.what();
            art.result.error_kind = "diverged";
        }
        // Partial state is still worth flushing after an abort.
        art.result.log = trainer.log();
        art.result.checkpoint_json =
            checkpoint_to_json(trainer.generator(), trainer.discriminator());
        art.final_fake = trainer.generate_from_bank();
    } catch (const ConfigError& e) {
        art.result.error = e.what();
        art.result.error_kind = "config";
    } catch (const IoError& e) {
        art.result.error = e.what();
        art.result.error_kind = "io";
    } catch (const DataError& e) {
        art.result.error = e.what();
        art.result.error_kind = "data";
    } catch (const std::exception& e) {
        art.result.error = e.what();
        art.result.error_kind = "error";
    }
    return art;
}

std::vector<std::pair<double, double>> matrix_points(const Matrix& m, int max_points) {
    std::vector<std::pair<double, double>> pts;
    if (m.cols < 2 || m.rows == 0) return pts;
    const int take = std::min(m.rows, max_points);
    pts.reserve(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) {
        // Stride subsample so every region of a mode-ordered dataset shows up.
        const int row = static_cast<int>(static_cast<long>(i) * m.rows / take);
        pts.emplace_back(m.at(row, 0), m.at(row, 1));
    }
    return pts;
}

ordered_json final_record_json(const RunLog& log) {
    if (log.empty()) return nullptr;
    const RunRecord& r = log.back();
    ordered_json j;
    j["iteration"] = r.iteration;
    j["d_loss_real"] = json_number_or_null(r.d_loss_real);
    j["d_loss_fake"] = json_number_or_null(r.d_loss_fake);
    j["g_loss"] = json_number_or_null(r.g_loss);
    j["mean_weight"] = json_number_or_null(r.mean_weight);
    j["sliced_wasserstein"] = json_number_or_null(r.sliced_wasserstein);
    j["mode_coverage"] = json_number_or_null(r.mode_coverage);
    j["hq_fraction"] = json_number_or_null(r.hq_fraction);
    return j;
}

ordered_json config_echo_json(const ExperimentSpec& spec, const CurriculumConfig& cur) {
    ordered_json j;
    j["dataset"] = spec.dataset.describe();
    j["dataset_seed"] = spec.dataset.seed;
    switch (spec.scores.kind) {
    case ScoreSource::Kind::file: j["scores"] = spec.scores.path; break;
    case ScoreSource::Kind::analytic: j["scores"] = "analytic"; break;
    case ScoreSource::Kind::constant: j["scores"] = "constant"; break;
    }
    j["difficulty_proxy"] =
        spec.scores.proxy == DifficultyProxy::mahalanobis ? "mahalanobis" : "euclidean";
    j["strategy"] = strategy_name(cur.strategy);
    j["k"] = cur.k;
    j["gamma"] = cur.gamma;
    j["m"] = cur.m;
    j["stage_cuts"] = cur.stage_cuts;
    j["weighting_mode"] = weighting_mode_name(cur.weighting_mode);
    j["loss"] = spec.gan.loss_kind == LossKind::hinge ? "hinge" : "cross-entropy";
    j["batch_size"] = spec.gan.batch_size;
    j["total_iterations"] = spec.gan.total_iterations;
    j["d_steps_per_g_step"] = spec.gan.d_steps_per_g_step;
    j["noise_dim"] = spec.gan.noise_dim;
    j["g_hidden"] = spec.gan.g_hidden;
    j["d_hidden"] = spec.gan.d_hidden;
    j["spectral_norm"] = spec.gan.spectral_norm;
    j["learning_rate"] = spec.gan.adam.lr;
    j["beta1"] = spec.gan.adam.beta1;
    j["beta2"] = spec.gan.adam.beta2;
    j["epsilon"] = spec.gan.adam.eps;
    j["eval_every"] = spec.gan.eval_every;
    j["eval_samples"] = spec.gan.eval_samples;
    j["sw_projections"] = spec.gan.sw_projections;
    j["hq_threshold"] = spec.gan.hq_threshold;
    ordered_json seeds = ordered_json::array();
    for (auto s : spec.seeds) seeds.push_back(s);
    j["seeds"] = std::move(seeds);
    return j;
}

} // namespace

RunOutputs run_experiment(const ExperimentSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    if (spec.seeds.empty()) throw ConfigError("run: need at least one seed");
    if (spec.out_dir.empty()) throw ConfigError("run: need an output directory");
    spec.gan.validate();
    const CurriculumConfig curriculum = spec.curriculum.resolve(spec.gan.total_iterations);

    std::error_code ec;
    fs::create_directories(spec.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + spec.out_dir + ": " + ec.message());

    const Dataset dataset = spec.dataset.build();
    const DifficultyScores scores = resolve_scores(spec.scores, dataset);

    std::vector<SeedArtifacts> artifacts(spec.seeds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= spec.seeds.size()) return;
            artifacts[i] = run_single_seed(spec, dataset, scores, curriculum, spec.seeds[i]);
        }
    };
    const int n_threads =
        std::min<int>(max_parallel_seeds(), static_cast<int>(spec.seeds.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Single collector writes every artifact after all seeds finish.
    RunOutputs outputs;
    ordered_json seeds_json = ordered_json::array();
    const Matrix& real = dataset.samples;
    for (const SeedArtifacts& art : artifacts) {
        const SeedResult& r = art.result;
        const std::string tag = "seed" + std::to_string(r.seed);
        ordered_json sj;
        sj["seed"] = r.seed;
        sj["status"] = r.ok ? "ok" : "failed";
        if (!r.ok) {
            sj["error"] = r.error;
            sj["error_kind"] = r.error_kind;
        }
        sj["final"] = final_record_json(r.log);
        ordered_json files;
        write_file(fs::path(spec.out_dir) / ("runlog_" + tag + ".csv"), runlog_to_csv(r.log));
        files["runlog"] = "runlog_" + tag + ".csv";
        if (!r.checkpoint_json.empty()) {
            write_file(fs::path(spec.out_dir) / ("checkpoint_" + tag + ".json"),
                       r.checkpoint_json);
            files["checkpoint"] = "checkpoint_" + tag + ".json";
        }
        if (art.final_fake.rows > 0) {
            std::vector<ScatterSeries> scatter;
            scatter.push_back({"real", "#b0b0b0", 1.3, matrix_points(real, 2048)});
            scatter.push_back({"generated", "#d62728", 1.3, matrix_points(art.final_fake, 2048)});
            write_file(fs::path(spec.out_dir) / ("samples_" + tag + ".svg"),
                       svg_scatter_plot("generated vs real samples (" + tag + ")", scatter));
            files["samples"] = "samples_" + tag + ".svg";
        }
        sj["artifacts"] = std::move(files);
        seeds_json.push_back(std::move(sj));
        outputs.seeds.push_back(r);
    }

    ordered_json summary;
    summary["status"] = outputs.all_ok() ? "ok" : "failed";
    summary["config"] = config_echo_json(spec, curriculum);
    summary["seeds"] = std::move(seeds_json);

    std::vector<double> final_sw, final_cov, final_hq;
    for (const SeedArtifacts& art : artifacts) {
        if (art.result.ok && !art.result.log.empty()) {
            final_sw.push_back(art.result.log.back().sliced_wasserstein);
            final_cov.push_back(art.result.log.back().mode_coverage);
            final_hq.push_back(art.result.log.back().hq_fraction);
        }
    }
    if (final_sw.empty()) {
        summary["final_median"] = nullptr;
    } else {
        ordered_json fm;
        fm["sliced_wasserstein"] = json_number_or_null(median(final_sw));
        fm["mode_coverage"] = json_number_or_null(median(final_cov));
        fm["hq_fraction"] = json_number_or_null(median(final_hq));
        summary["final_median"] = std::move(fm);
    }
    write_file(fs::path(spec.out_dir) / "summary.json", summary.dump(2) + "\n");

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[cugan] run %s: %zu seed(s) in %.1fs -> %s\n",
                strategy_name(curriculum.strategy), spec.seeds.size(), secs,
                spec.out_dir.c_str());
    std::fflush(stdout);
    return outputs;
}

namespace {

struct MetricAccess {
    const char* name;
    const char* direction;
    double RunRecord::*field;
};

constexpr MetricAccess kMetrics[] = {
    {"sliced_wasserstein", "min", &RunRecord::sliced_wasserstein},
    {"mode_coverage", "max", &RunRecord::mode_coverage},
    {"hq_fraction", "max", &RunRecord::hq_fraction},
};

} // namespace

ComparisonSummary summarize_comparison(const std::vector<std::string>& names,
                                       const std::vector<RunOutputs>& outputs) {
    if (names.size() != outputs.size() || names.empty()) {
        throw ConfigError("comparison needs at least one named run set");
    }
    ComparisonSummary summary;
    summary.strategies = names;

    // Shared eval grid from the first ok seed anywhere.
    for (const RunOutputs& out : outputs) {
        for (const SeedResult& r : out.seeds) {
            if (r.ok && !r.log.empty() && summary.eval_iterations.empty()) {
                for (const RunRecord& rec : r.log) summary.eval_iterations.push_back(rec.iteration);
            }
        }
    }
    if (summary.eval_iterations.empty()) {
        throw ConfigError("comparison: no successful runs to compare");
    }
    const std::size_t n_points = summary.eval_iterations.size();

    for (std::size_t s = 0; s < names.size(); ++s) {
        std::map<std::string, std::vector<double>> curves;
        for (const MetricAccess& metric : kMetrics) {
            std::vector<double> curve;
            curve.reserve(n_points);
            for (std::size_t p = 0; p < n_points; ++p) {
                std::vector<double> vals;
                for (const SeedResult& r : outputs[s].seeds) {
                    if (r.ok && r.log.size() == n_points) {
                        vals.push_back(r.log[p].*(metric.field));
                    }
                }
                curve.push_back(vals.empty() ? std::nan("") : median(std::move(vals)));
            }
            curves[metric.name] = std::move(curve);
        }
        summary.median_curves[names[s]] = std::move(curves);
    }

    const std::string& baseline = names.front();
    for (const MetricAccess& metric : kMetrics) {
        const std::vector<double>& base_curve = summary.median_curves[baseline][metric.name];
        const double threshold = base_curve.empty() ? std::nan("") : base_curve.back();
        if (!std::isfinite(threshold)) continue;  // e.g. coverage without metadata

        MetricVerdict verdict;
        verdict.direction = metric.direction;
        verdict.threshold = threshold;
        const bool minimize = std::string(metric.direction) == "min";
        for (const std::string& name : names) {
            const std::vector<double>& curve = summary.median_curves[name][metric.name];
            std::optional<long> reached;
            for (std::size_t p = 0; p < curve.size(); ++p) {
                const bool crossed = minimize ? curve[p] <= threshold : curve[p] >= threshold;
                if (std::isfinite(curve[p]) && crossed) {
                    reached = summary.eval_iterations[p];
                    break;
                }
            }
            verdict.iterations_to_threshold[name] = reached;
        }
        const std::optional<long> base_iters = verdict.iterations_to_threshold[baseline];
        for (const std::string& name : names) {
            if (name == baseline) {
                verdict.verdict[name] = "baseline";
                continue;
            }
            const std::optional<long> iters = verdict.iterations_to_threshold[name];
            if (!iters && !base_iters) verdict.verdict[name] = "tie";
            else if (!iters) verdict.verdict[name] = "loss";
            else if (!base_iters) verdict.verdict[name] = "win";
            else if (*iters < *base_iters) verdict.verdict[name] = "win";
            else if (*iters == *base_iters) verdict.verdict[name] = "tie";
            else verdict.verdict[name] = "loss";
        }
        summary.metrics[metric.name] = std::move(verdict);
    }
    return summary;
}

ComparisonSummary compare_experiments(
    const std::vector<std::pair<std::string, ExperimentSpec>>& specs,
    const std::string& out_dir) {
    if (specs.empty()) throw ConfigError("compare: need at least one spec");
    const ExperimentSpec& ref = specs.front().second;
    for (const auto& [name, spec] : specs) {
        if (name.empty()) throw ConfigError("compare: run names must be non-empty");
        if (spec.dataset.describe() != ref.dataset.describe() ||
            spec.dataset.seed != ref.dataset.seed) {
            throw ConfigError("compare: all runs must share the dataset");
        }
        if (spec.seeds != ref.seeds) {
            throw ConfigError("compare: all runs must share the seed list");
        }
        if (spec.gan.total_iterations != ref.gan.total_iterations ||
            spec.gan.eval_every != ref.gan.eval_every) {
            throw ConfigError("compare: all runs must share the iteration budget");
        }
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

    std::vector<std::string> names;
    std::vector<RunOutputs> outputs;
    for (const auto& [name, spec] : specs) {
        ExperimentSpec sub = spec;
        sub.out_dir = (fs::path(out_dir) / name).string();
        names.push_back(name);
        outputs.push_back(run_experiment(sub));
    }

    const ComparisonSummary summary = summarize_comparison(names, outputs);

    ordered_json j;
    j["baseline"] = summary.strategies.front();
    j["strategies"] = summary.strategies;
    j["eval_iterations"] = summary.eval_iterations;
    ordered_json metrics_json;
    for (const MetricAccess& metric : kMetrics) {
        const auto it = summary.metrics.find(metric.name);
        if (it == summary.metrics.end()) continue;
        const MetricVerdict& v = it->second;
        ordered_json mj;
        mj["direction"] = v.direction;
        mj["threshold"] = v.threshold;
        ordered_json iters;
        ordered_json verdicts;
        for (const std::string& name : summary.strategies) {
            const auto& reached = v.iterations_to_threshold.at(name);
            if (reached) iters[name] = *reached;
            else iters[name] = nullptr;
            verdicts[name] = v.verdict.at(name);
        }
        mj["iterations_to_threshold"] = std::move(iters);
        mj["verdict"] = std::move(verdicts);
        metrics_json[metric.name] = std::move(mj);
    }
    j["metrics"] = std::move(metrics_json);
    ordered_json curves_json;
    for (const std::string& name : summary.strategies) {
        ordered_json cj;
        for (const MetricAccess& metric : kMetrics) {
            ordered_json arr = ordered_json::array();
            for (double val : summary.median_curves.at(name).at(metric.name)) {
                arr.push_back(json_number_or_null(val));
            }
            cj[metric.name] = std::move(arr);
        }
        curves_json[name] = std::move(cj);
    }
    j["median_curves"] = std::move(curves_json);
    write_file(fs::path(out_dir) / "comparison.json", j.dump(2) + "\n");

    std::string csv =
        "iteration,strategy,median_sliced_wasserstein,median_mode_coverage,median_hq_fraction\n";
    for (std::size_t p = 0; p < summary.eval_iterations.size(); ++p) {
        for (const std::string& name : summary.strategies) {
            const auto& curves = summary.median_curves.at(name);
            csv += std::to_string(summary.eval_iterations[p]) + "," + name + "," +
                   format_double(curves.at("sliced_wasserstein")[p]) + "," +
                   format_double(curves.at("mode_coverage")[p]) + "," +
                   format_double(curves.at("hq_fraction")[p]) + "\n";
        }
    }
    write_file(fs::path(out_dir) / "comparison.csv", csv);

    std::vector<PlotSeries> series;
    for (std::size_t s = 0; s < summary.strategies.size(); ++s) {
        PlotSeries ps;
        ps.label = summary.strategies[s];
        ps.color = kStrategyColors[s % (sizeof kStrategyColors / sizeof *kStrategyColors)];
        const auto& curve = summary.median_curves.at(summary.strategies[s]).at("sliced_wasserstein");
        for (std::size_t p = 0; p < curve.size(); ++p) {
            ps.points.emplace_back(static_cast<double>(summary.eval_iterations[p]), curve[p]);
        }
        series.push_back(std::move(ps));
    }
    std::optional<double> threshold;
    if (auto it = summary.metrics.find("sliced_wasserstein"); it != summary.metrics.end()) {
        threshold = it->second.threshold;
    }
    write_file(fs::path(out_dir) / "overlay.svg",
               svg_line_plot("median sliced Wasserstein vs iterations", "iteration",
                             "sliced Wasserstein", series, threshold));
    return summary;
}

void dump_weights(const std::vector<double>& scores, double k, double gamma,
                  const std::vector<long>& t_grid, const std::string& out_dir) {
    if (scores.empty()) throw ConfigError("dump-weights: need at least one score");
    if (!(k > 0.0)) throw ConfigError("dump-weights: k must be > 0");
    if (!(gamma > 0.0)) throw ConfigError("dump-weights: gamma must be > 0");
    if (t_grid.empty()) throw ConfigError("dump-weights: empty t grid");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

    std::string csv = "iteration";
    for (double s : scores) csv += ",s=" + format_double(s, "%.6g");
    csv += "\n";
    std::vector<PlotSeries> series(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        series[i].label = "s=" + format_double(scores[i], "%.6g");
        series[i].color = kStrategyColors[i % (sizeof kStrategyColors / sizeof *kStrategyColors)];
    }
    for (long t : t_grid) {
        csv += std::to_string(t);
        for (std::size_t i = 0; i < scores.size(); ++i) {
            const double w = easiness_weight(scores[i], t, k, gamma);
            csv += "," + format_double(w);
            series[i].points.emplace_back(static_cast<double>(t), w);
        }
        csv += "\n";
    }
    write_file(fs::path(out_dir) / "weights.csv", csv);
    write_file(fs::path(out_dir) / "weights.svg",
               svg_line_plot("easiness weights over training", "iteration", "weight", series));
}

void dump_dataset(const DatasetSpec& spec, DifficultyProxy proxy, bool with_scores,
                  const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    const Dataset ds = spec.build();
    save_csv_dataset(ds, (fs::path(out_dir) / "dataset.csv").string());
    if (with_scores) {
        const RawScores raw = analytic_scores(ds, proxy);
        std::string text;
        for (double v : raw.values) text += format_double(v, "%.17g") + std::string("\n");
        write_file(fs::path(out_dir) / "scores.txt", text);
    }
}

} // namespace cugan
