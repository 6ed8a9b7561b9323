#pragma once

#include <span>
#include <vector>

#include "cugan/data.hpp"
#include "cugan/matrix.hpp"
#include "cugan/rng.hpp"

namespace cugan {

struct MetricReport {
    double sliced_wasserstein = 0.0;
    double mode_coverage = 0.0;
    double hq_fraction = 0.0;
};

/// Mean 1-D Wasserstein-1 distance between the two sample sets projected onto
/// the given unit directions. Distances are computed on sorted equal-size
/// samples; when set sizes differ, the larger set is subsampled without
/// replacement using rng.
double sliced_wasserstein_projected(const Matrix& a, const Matrix& b,
                                    const std::vector<std::vector<double>>& directions,
                                    RngStream& rng);

/// Same, averaging over n_projections random unit directions drawn from rng.
double sliced_wasserstein(const Matrix& a, const Matrix& b, int n_projections,
                          RngStream& rng);

/// Fraction of modes with at least one fake sample within
/// threshold_multiple * sigma of the mode mean.
double mode_coverage(const Matrix& fake, const DatasetMeta& meta,
                     double threshold_multiple);

/// Fraction of fake samples within threshold_multiple * sigma of any mode mean.
double hq_fraction(const Matrix& fake, const DatasetMeta& meta,
                   double threshold_multiple);

} // namespace cugan
