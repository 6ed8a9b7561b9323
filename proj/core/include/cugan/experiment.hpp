#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cugan/curriculum.hpp"
#include "cugan/data.hpp"
#include "cugan/difficulty.hpp"
#include "cugan/gan.hpp"

namespace cugan {

/// Parsed form of --dataset {ring:...|graded:...|csv:<path>}.
struct DatasetSpec {
    enum class Kind { ring, graded, csv };
    Kind kind = Kind::ring;
    int n_modes = 8;
    double radius = 2.0;
    double sigma = 0.05;        // ring
    double sigma_min = 0.05;    // graded
    double sigma_max = 0.5;
    int samples_per_mode = 1000;
    std::string csv_path;
    std::uint64_t seed = 42;

    /// "ring:<modes>,<radius>,<sigma>[,<per_mode>]",
    /// "graded:<modes>,<radius>,<sigma_min>,<sigma_max>[,<per_mode>]",
    /// "csv:<path>".
    static DatasetSpec parse(const std::string& text);
    std::string describe() const;
    Dataset build() const;
};

/// Curriculum flags before resolution against the iteration budget.
/// k = 0 picks the per-strategy default (2 for weighting, 4 for sampling),
/// gamma = 0 scales so that 10/gamma equals the total iterations, and empty
/// stage cuts default to 18.75% / 31.25% of the run.
struct CurriculumOptions {
    Strategy strategy = Strategy::none;
    double k = 0.0;
    double gamma = 0.0;
    int m = 3;
    std::vector<long> stage_cuts;
    WeightingMode weighting_mode = WeightingMode::multiplicative;

    CurriculumConfig resolve(long total_iterations) const;
};

Strategy strategy_from_name(const std::string& name);
const char* strategy_name(Strategy s);
WeightingMode weighting_mode_from_name(const std::string& name);
const char* weighting_mode_name(WeightingMode m);

struct ExperimentSpec {
    DatasetSpec dataset;
    ScoreSource scores;
    GanConfig gan;  // per-seed copies get gan.seed overwritten
    CurriculumOptions curriculum;
    std::vector<std::uint64_t> seeds = {1};
    std::string out_dir;
};

struct SeedResult {
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;        // empty when ok
    std::string error_kind;   // "diverged" | "config" | "io" | "data"
    RunLog log;
    std::string checkpoint_json;
};

struct RunOutputs {
    std::vector<SeedResult> seeds;
    bool all_ok() const;
};

/// Trains one run per seed (in parallel, capped by CUGAN_THREADS) and writes
/// runlog_seed<s>.csv, checkpoint_seed<s>.json, samples_seed<s>.svg and a
/// summary.json into spec.out_dir. All outputs are deterministic functions of
/// the spec; wall-clock timing goes to stdout only.
RunOutputs run_experiment(const ExperimentSpec& spec);

struct MetricVerdict {
    std::string direction;  // "min" or "max"
    double threshold = 0.0;
    // Per strategy: first eval iteration whose median curve crosses the
    // threshold; absent when never reached.
    std::map<std::string, std::optional<long>> iterations_to_threshold;
    std::map<std::string, std::string> verdict;  // win / tie / loss / baseline
};

struct ComparisonSummary {
    std::vector<std::string> strategies;  // first entry is the baseline
    std::vector<long> eval_iterations;
    std::map<std::string, std::map<std::string, std::vector<double>>> median_curves;
    std::map<std::string, MetricVerdict> metrics;
};

/// Runs each named spec into out_dir/<name>/ and emits comparison.json,
/// comparison.csv and overlay.svg. All specs must share the dataset, seeds
/// and iteration budget; the first entry is the baseline whose final median
/// value defines each metric's threshold.
ComparisonSummary compare_experiments(
    const std::vector<std::pair<std::string, ExperimentSpec>>& specs,
    const std::string& out_dir);

ComparisonSummary summarize_comparison(
    const std::vector<std::string>& names,
    const std::vector<RunOutputs>& outputs);

/// Easiness-weight trajectories for a set of difficulty scores on a t grid:
/// weights.csv plus weights.svg under out_dir.
void dump_weights(const std::vector<double>& scores, double k, double gamma,
                  const std::vector<long>& t_grid, const std::string& out_dir);

/// dataset.csv (17 significant digits) plus scores.txt with raw analytic
/// scores when the dataset carries metadata.
void dump_dataset(const DatasetSpec& spec, DifficultyProxy proxy,
                  bool with_scores, const std::string& out_dir);

/// Parallel-seed cap from CUGAN_THREADS, defaulting to hardware concurrency.
int max_parallel_seeds();

} // namespace cugan
