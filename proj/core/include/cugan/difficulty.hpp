#pragma once

#include <span>
#include <string>
#include <vector>

#include "cugan/data.hpp"

namespace cugan {

/// Unbounded raw predictor outputs, one per training sample.
struct RawScores {
    std::vector<double> values;
};

/// Normalized per-sample difficulty in [-1, 1], index-aligned with the dataset.
struct DifficultyScores {
    std::vector<double> s;

    int size() const { return static_cast<int>(s.size()); }
};

/// Affine map of raw scores onto [-1, 1]: min -> -1, max -> +1.
/// Constant input maps to all zeros.
DifficultyScores normalize_scores(const RawScores& raw);

/// Indices sorted by ascending difficulty; ties broken by original index.
std::vector<int> rank_by_difficulty(const DifficultyScores& scores);

enum class DifficultyProxy { euclidean, mahalanobis };

/// Distance of a sample from its generating mode's mean. The mahalanobis
/// variant divides by the mode's isotropic sigma; euclidean leaves the raw
/// distance, which keeps a genuine easy->hard gradient on graded mixtures.
double analytic_difficulty(std::span<const double> sample,
                           std::span<const double> mode_mean, double sigma,
                           DifficultyProxy proxy);

/// Raw analytic scores for every sample of a synthetic dataset.
RawScores analytic_scores(const Dataset& ds, DifficultyProxy proxy);

/// One decimal raw score per line, index-aligned with the dataset.
RawScores load_score_file(const std::string& path);

struct ScoreSource {
    enum class Kind { file, analytic, constant };
    Kind kind = Kind::analytic;
    std::string path;
    DifficultyProxy proxy = DifficultyProxy::euclidean;
};

/// Produces normalized scores for a dataset from the configured source,
/// enforcing one score per sample for file-backed sources.
DifficultyScores resolve_scores(const ScoreSource& source, const Dataset& ds);

} // namespace cugan
