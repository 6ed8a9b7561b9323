#pragma once

#include <vector>

#include "cugan/matrix.hpp"
#include "cugan/rng.hpp"

namespace cugan {

struct SpectralNormState;

enum class Activation { identity, relu, leaky_relu, tanh_act };

const char* activation_name(Activation a);
Activation activation_from_name(const std::string& name);

/// Dense layer. Weights are stored input-major (in x out), so a batch X of
/// shape n x in maps to X * W + b.
struct Layer {
    Matrix weight;
    std::vector<double> bias;
    Activation activation = Activation::identity;
    bool spectral_norm = false;

    int in_dim() const { return weight.rows; }
    int out_dim() const { return weight.cols; }
};

struct Mlp {
    std::vector<Layer> layers;

    int input_dim() const { return layers.front().in_dim(); }
    int output_dim() const { return layers.back().out_dim(); }
    std::size_t parameter_count() const;
};

/// Xavier-uniform initialized network; biases start at zero. Layer count is
/// dims.size() - 1 and activations.size() must match it.
Mlp make_mlp(const std::vector<int>& dims, const std::vector<Activation>& activations,
             bool spectral_norm, RngStream& init);

/// Everything backward() needs from the matching forward() call.
struct ForwardCache {
    Matrix input;
    std::vector<Matrix> pre;       // pre-activation per layer
    std::vector<Matrix> post;      // post-activation per layer
    std::vector<double> sigma;     // spectral-norm divisor used per layer
    std::vector<bool> normalized;  // whether the divisor was applied
};

/// Affine + activation composition. When a layer has spectral_norm set and a
/// state is supplied, its weight is divided by the current power-iteration
/// estimate sigma = u^T W v (u, v held fixed within the pass).
Matrix forward(const Mlp& net, const Matrix& batch, const SpectralNormState* sn,
               ForwardCache* cache = nullptr);

struct Gradients {
    std::vector<Matrix> weight;
    std::vector<std::vector<double>> bias;
    Matrix input;  // dL/dX for chaining into an upstream network
};

/// Exact reverse-mode gradients of a scalar loss whose gradient w.r.t. the
/// network outputs is out_grad. Spectral normalization is differentiated
/// through sigma (u, v treated as constants), which adds the rank-one
/// correction -<G, W_bar> / sigma * u v^T to the raw weight gradient.
Gradients backward(const Mlp& net, const ForwardCache& cache, const Matrix& out_grad,
                   const SpectralNormState* sn);

} // namespace cugan
