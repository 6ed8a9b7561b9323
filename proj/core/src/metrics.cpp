#include "cugan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cugan/errors.hpp"

namespace cugan {
namespace {

// Partial Fisher-Yates: first `take` entries of a shuffled [0, n) range.
std::vector<int> sample_without_replacement(int n, int take, RngStream& rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < take; ++i) {
        const int j = i + rng.uniform_int(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(static_cast<std::size_t>(take));
    return idx;
}

std::vector<double> project(const Matrix& m, std::span<const int> rows,
                            std::span<const double> dir) {
    std::vector<double> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i] = dot(m.row(rows[i]), dir);
    }
    return out;
}

} // namespace

double sliced_wasserstein_projected(const Matrix& a, const Matrix& b,
                                    const std::vector<std::vector<double>>& directions,
                                    RngStream& rng) {
    if (a.cols != b.cols) {
        throw ConfigError("sliced_wasserstein: dimension mismatch (" +
                          std::to_string(a.cols) + " vs " + std::to_string(b.cols) + ")");
    }
    const int n = std::min(a.rows, b.rows);
    std::vector<int> rows_a, rows_b;
    if (a.rows == n) {
        rows_a.resize(static_cast<std::size_t>(n));
        std::iota(rows_a.begin(), rows_a.end(), 0);
    } else {
        rows_a = sample_without_replacement(a.rows, n, rng);
    }
    if (b.rows == n) {
        rows_b.resize(static_cast<std::size_t>(n));
        std::iota(rows_b.begin(), rows_b.end(), 0);
    } else {
        rows_b = sample_without_replacement(b.rows, n, rng);
    }

    double total = 0.0;
    for (const auto& dir : directions) {
        std::vector<double> pa = project(a, rows_a, dir);
        std::vector<double> pb = project(b, rows_b, dir);
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        double w1 = 0.0;
        for (int i = 0; i < n; ++i) w1 += std::abs(pa[i] - pb[i]);
        total += w1 / n;
    }
    return total / static_cast<double>(directions.size());
}

double sliced_wasserstein(const Matrix& a, const Matrix& b, int n_projections,
                          RngStream& rng) {
    if (n_projections < 1) throw ConfigError("sliced_wasserstein: need n_projections >= 1");
    const int d = a.cols;
    std::vector<std::vector<double>> directions(static_cast<std::size_t>(n_projections));
    for (auto& dir : directions) {
        dir.resize(static_cast<std::size_t>(d));
        double norm = 0.0;
        do {
            for (double& x : dir) x = rng.gaussian();
            norm = l2_norm(dir);
        } while (norm == 0.0);
        for (double& x : dir) x /= norm;
    }
    return sliced_wasserstein_projected(a, b, directions, rng);
}

double mode_coverage(const Matrix& fake, const DatasetMeta& meta,
                     double threshold_multiple) {
    const int n_modes = static_cast<int>(meta.mode_means.size());
    int covered = 0;
    for (int j = 0; j < n_modes; ++j) {
        const auto& mean = meta.mode_means[j];
        const double limit = threshold_multiple * meta.mode_sigmas[j];
        const double limit_sq = limit * limit;
        for (int i = 0; i < fake.rows; ++i) {
            double sq = 0.0;
            const auto row = fake.row(i);
            for (std::size_t c = 0; c < mean.size(); ++c) {
                const double diff = row[c] - mean[c];
                sq += diff * diff;
            }
            if (sq <= limit_sq) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / n_modes;
}

double hq_fraction(const Matrix& fake, const DatasetMeta& meta,
                   double threshold_multiple) {
    const int n_modes = static_cast<int>(meta.mode_means.size());
    int good = 0;
    for (int i = 0; i < fake.rows; ++i) {
        const auto row = fake.row(i);
        for (int j = 0; j < n_modes; ++j) {
            const auto& mean = meta.mode_means[j];
            const double limit = threshold_multiple * meta.mode_sigmas[j];
            double sq = 0.0;
            for (std::size_t c = 0; c < mean.size(); ++c) {
                const double diff = row[c] - mean[c];
                sq += diff * diff;
            }
            if (sq <= limit * limit) {
                ++good;
                break;
            }
        }
    }
    return static_cast<double>(good) / fake.rows;
}

} // namespace cugan
