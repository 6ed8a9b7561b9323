#pragma once

#include <vector>

#include "cugan/matrix.hpp"
#include "cugan/mlp.hpp"
#include "cugan/rng.hpp"

namespace cugan {

/// Persistent singular-vector estimates for one weight matrix.
struct PowerIter {
    std::vector<double> u;  // length = weight rows
    std::vector<double> v;  // length = weight cols

    static PowerIter init(const Matrix& w, RngStream& rng);

    /// One iteration updates v from u, then u from v.
    void iterate(const Matrix& w, int iterations = 1);

    /// Current estimate of the largest singular value, u^T W v.
    double sigma(const Matrix& w) const;
};

/// weight / sigma-hat, leaving the weight untouched when the estimate is
/// numerically zero.
Matrix spectral_normalize(const PowerIter& state, const Matrix& weight);

/// Per-layer estimates for the spectral-norm layers of a network.
struct SpectralNormState {
    std::vector<PowerIter> layers;  // indexed like net.layers; unused slots empty

    static SpectralNormState init(const Mlp& net, RngStream& rng);

    /// The once-per-training-step update.
    void power_iterate(const Mlp& net, int iterations = 1);
};

} // namespace cugan
