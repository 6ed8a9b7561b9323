#pragma once

#include <span>
#include <vector>

#include "cugan/difficulty.hpp"
#include "cugan/rng.hpp"

namespace cugan {

enum class Strategy { none, batches, weighting, sampling };
enum class WeightingMode { additive, multiplicative };

struct CurriculumConfig {
    Strategy strategy = Strategy::none;
    double k = 1.0;
    double gamma = 5e-5;
    int m = 3;                        // batch count for the batches strategy
    std::vector<long> stage_cuts;     // m-1 strictly increasing iteration thresholds
    WeightingMode weighting_mode = WeightingMode::multiplicative;
    long total_iterations = 0;

    void validate() const;
};

/// Easiness weight 1 - k * s * exp(-gamma * t). Favors easy samples
/// (s < 0) early and converges to 1 for every sample as t grows.
double easiness_weight(double s, long t, double k, double gamma);

/// Element-wise easiness weights over all samples at iteration t.
std::vector<double> batch_weights(const DifficultyScores& scores, long t,
                                  const CurriculumConfig& config);

/// Normalize nonnegative shifted weights into a categorical distribution.
/// Throws DegenerateDistributionError when the vector sums to zero.
std::vector<double> normalize_shifted_weights(std::span<const double> shifted);

/// Per-sample draw probabilities: (w_i + max(0, k-1)) / sum_j (w_j + max(0, k-1)).
/// The shift keeps every term nonnegative when k > 1; the k <= 1 path is
/// unchanged because its weights already live in [1-k, 1+k].
std::vector<double> sample_probabilities(const DifficultyScores& scores, long t,
                                         const CurriculumConfig& config);

/// Walker alias table: O(n) build, O(1) draw, two uniforms per draw.
class AliasTable {
public:
    explicit AliasTable(std::span<const double> probs);
    int draw(RngStream& rng) const;
    int size() const { return static_cast<int>(threshold_.size()); }

private:
    std::vector<double> threshold_;
    std::vector<int> alias_;
};

/// count i.i.d. draws (with replacement) from the categorical distribution.
std::vector<int> draw_indices(std::span<const double> probs, int count, RngStream& rng);

/// Number of eligible samples at iteration t for the batches strategy:
/// ceil(j*n/m) where j counts the stages entered so far. Pools are
/// cumulative, so easy samples stay in until the end.
long active_pool_size(long t, const CurriculumConfig& config, long n);

/// Trainer-facing view of one iteration: which real samples are eligible
/// (or their draw probabilities) and the per-sample loss weights.
struct IterationPlan {
    Strategy strategy = Strategy::none;
    WeightingMode weighting_mode = WeightingMode::multiplicative;
    long eligible = 0;                  // prefix length into the ranking
    std::vector<double> probabilities;  // sampling strategy only
    std::vector<double> weights;        // weighting strategy only

    bool uses_probabilities() const { return strategy == Strategy::sampling; }
};

IterationPlan plan_for_iteration(long t, const CurriculumConfig& config,
                                 const DifficultyScores& scores,
                                 const std::vector<int>& ranking);

} // namespace cugan
