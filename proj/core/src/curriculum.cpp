#include "cugan/curriculum.hpp"

#include <algorithm>
#include <cmath>

#include "cugan/errors.hpp"

namespace cugan {

void CurriculumConfig::validate() const {
    if (!(k > 0.0)) throw ConfigError("curriculum: k must be > 0");
    if (!(gamma > 0.0)) throw ConfigError("curriculum: gamma must be > 0");
    if (m < 1) throw ConfigError("curriculum: m must be >= 1");
    if (strategy == Strategy::batches) {
        if (static_cast<int>(stage_cuts.size()) != m - 1)
            throw ConfigError("curriculum: need exactly m-1 stage cuts");
        for (std::size_t i = 0; i < stage_cuts.size(); ++i) {
            if (stage_cuts[i] < 0 || stage_cuts[i] >= total_iterations)
                throw ConfigError("curriculum: stage cuts must lie inside the run");
            if (i > 0 && stage_cuts[i] <= stage_cuts[i - 1])
                throw ConfigError("curriculum: stage cuts must be strictly increasing");
        }
    }
}

double easiness_weight(double s, long t, double k, double gamma) {
    return 1.0 - k * s * std::exp(-gamma * static_cast<double>(t));
}

std::vector<double> batch_weights(const DifficultyScores& scores, long t,
                                  const CurriculumConfig& config) {
    std::vector<double> w(scores.s.size());
    const double decay = std::exp(-config.gamma * static_cast<double>(t));
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = 1.0 - config.k * scores.s[i] * decay;
    }
    return w;
}

std::vector<double> normalize_shifted_weights(std::span<const double> shifted) {
    double sum = 0.0;
    for (double v : shifted) sum += v;
    if (!(sum > 0.0)) {
        throw DegenerateDistributionError(
            "sampling weights are all zero (k=1, t=0 with every score at +1); "
            "use k > 1 or fall back to the uniform baseline");
    }
    std::vector<double> p(shifted.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = shifted[i] / sum;
    return p;
}

std::vector<double> sample_probabilities(const DifficultyScores& scores, long t,
                                         const CurriculumConfig& config) {
    const double shift = std::max(0.0, config.k - 1.0);
    std::vector<double> shifted = batch_weights(scores, t, config);
    for (double& v : shifted) {
        v += shift;
        // Scores live in [-1, 1] so the shifted weight is analytically >= 0;
        // clamp rounding residue.
        if (v < 0.0) v = 0.0;
    }
    return normalize_shifted_weights(shifted);
}

AliasTable::AliasTable(std::span<const double> probs) {
    const int n = static_cast<int>(probs.size());
    threshold_.assign(n, 0.0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    std::vector<int> small, large;
    small.reserve(n);
    large.reserve(n);
    for (int i = 0; i < n; ++i) {
        scaled[i] = probs[i] * n;
        (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        const int s = small.back();
        const int l = large.back();
        small.pop_back();
        large.pop_back();
        threshold_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (int i : large) threshold_[i] = 1.0;
    // Leftover small entries are full buckets up to rounding.
    for (int i : small) threshold_[i] = 1.0;
}

int AliasTable::draw(RngStream& rng) const {
    const int bucket = rng.uniform_int(size());
    const double coin = rng.uniform();
    return coin < threshold_[bucket] ? bucket : alias_[bucket];
}

std::vector<int> draw_indices(std::span<const double> probs, int count, RngStream& rng) {
    AliasTable table(probs);
    std::vector<int> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[i] = table.draw(rng);
    return out;
}

long active_pool_size(long t, const CurriculumConfig& config, long n) {
    long stage = 1;
    for (long cut : config.stage_cuts) {
        if (cut <= t) ++stage;
    }
    if (stage >= config.m) return n;
    // ceil(stage * n / m)
    return (stage * n + config.m - 1) / config.m;
}

IterationPlan plan_for_iteration(long t, const CurriculumConfig& config,
                                 const DifficultyScores& scores,
                                 const std::vector<int>& ranking) {
    const long n = scores.size();
    IterationPlan plan;
    plan.strategy = config.strategy;
    plan.weighting_mode = config.weighting_mode;
    switch (config.strategy) {
    case Strategy::none:
        plan.eligible = n;
        break;
    case Strategy::batches:
        plan.eligible = active_pool_size(t, config, n);
        (void)ranking;
        break;
    case Strategy::weighting:
        plan.eligible = n;
        plan.weights = batch_weights(scores, t, config);
        break;
    case Strategy::sampling:
        plan.eligible = n;
        plan.probabilities = sample_probabilities(scores, t, config);
        break;
    }
    return plan;
}

} // namespace cugan
