#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cugan/matrix.hpp"

namespace cugan {

/// Generating structure of a synthetic mixture, kept alongside the samples so
/// analytic difficulty scores and mode-based metrics can be computed.
struct DatasetMeta {
    std::vector<int> mode_of;                     // per-sample generating mode
    std::vector<std::vector<double>> mode_means;  // per-mode mean
    std::vector<double> mode_sigmas;              // per-mode isotropic sigma
};

struct Dataset {
    Matrix samples;  // n x d, one sample per row
    std::optional<DatasetMeta> meta;

    int size() const { return samples.rows; }
    int dim() const { return samples.cols; }
};

/// Gaussian mixture with modes equally spaced on a circle. Mode j sits at
/// angle 2*pi*j/n_modes; mode 0 at (radius, 0). Samples are ordered mode-major.
Dataset make_ring_gmm(int n_modes, double radius, double sigma,
                      int samples_per_mode, std::uint64_t seed);

/// Ring mixture whose per-mode sigma interpolates geometrically from
/// sigma_min (mode 0) to sigma_max (last mode). Equal bounds reproduce
/// make_ring_gmm sample for sample.
Dataset make_graded_mixture(int n_modes, double radius, double sigma_min,
                            double sigma_max, int samples_per_mode,
                            std::uint64_t seed);

/// Headerless numeric CSV, one sample per row. No metadata.
Dataset load_csv_dataset(const std::string& path);

/// Writes samples with 17 significant digits so a reload is bit-identical.
void save_csv_dataset(const Dataset& ds, const std::string& path);

} // namespace cugan
