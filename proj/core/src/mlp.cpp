#include "cugan/mlp.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "cugan/errors.hpp"
#include "cugan/spectral_norm.hpp"

namespace cugan {
namespace {

constexpr double kLeakySlope = 0.1;

void apply_activation(Activation act, const Matrix& pre, Matrix& post) {
    post = pre;
    switch (act) {
    case Activation::identity:
        break;
    case Activation::relu:
        for (double& x : post.data) x = x > 0.0 ? x : 0.0;
        break;
    case Activation::leaky_relu:
        for (double& x : post.data) x = x > 0.0 ? x : kLeakySlope * x;
        break;
    case Activation::tanh_act:
        for (double& x : post.data) x = std::tanh(x);
        break;
    }
}

// dZ = dA (.) act'(Z), using cached pre/post activations.
void apply_activation_grad(Activation act, const Matrix& pre, const Matrix& post,
                           Matrix& grad) {
    switch (act) {
    case Activation::identity:
        break;
    case Activation::relu:
        for (std::size_t i = 0; i < grad.data.size(); ++i) {
            if (pre.data[i] <= 0.0) grad.data[i] = 0.0;
        }
        break;
    case Activation::leaky_relu:
        for (std::size_t i = 0; i < grad.data.size(); ++i) {
            if (pre.data[i] <= 0.0) grad.data[i] *= kLeakySlope;
        }
        break;
    case Activation::tanh_act:
        for (std::size_t i = 0; i < grad.data.size(); ++i) {
            grad.data[i] *= 1.0 - post.data[i] * post.data[i];
        }
        break;
    }
}

} // namespace

const char* activation_name(Activation a) {
    switch (a) {
    case Activation::identity: return "identity";
    case Activation::relu: return "relu";
    case Activation::leaky_relu: return "leaky-relu";
    case Activation::tanh_act: return "tanh";
    }
    return "identity";
}

Activation activation_from_name(const std::string& name) {
    if (name == "identity") return Activation::identity;
    if (name == "relu") return Activation::relu;
    if (name == "leaky-relu") return Activation::leaky_relu;
    if (name == "tanh") return Activation::tanh_act;
    throw DataError("unknown activation: " + name);
}

std::size_t Mlp::parameter_count() const {
    std::size_t n = 0;
    for (const Layer& l : layers) n += l.weight.data.size() + l.bias.size();
    return n;
}

Mlp make_mlp(const std::vector<int>& dims, const std::vector<Activation>& activations,
             bool spectral_norm, RngStream& init) {
    assert(dims.size() >= 2 && activations.size() == dims.size() - 1);
    Mlp net;
    net.layers.resize(dims.size() - 1);
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        Layer& layer = net.layers[l];
        layer.weight = Matrix(dims[l], dims[l + 1]);
        layer.bias.assign(static_cast<std::size_t>(dims[l + 1]), 0.0);
        layer.activation = activations[l];
        layer.spectral_norm = spectral_norm;
        const double bound = std::sqrt(6.0 / (dims[l] + dims[l + 1]));
        for (double& w : layer.weight.data) {
            w = (2.0 * init.uniform() - 1.0) * bound;
        }
    }
    return net;
}

Matrix forward(const Mlp& net, const Matrix& batch, const SpectralNormState* sn,
               ForwardCache* cache) {
    if (batch.cols != net.input_dim()) {
        throw ConfigError("forward: batch has " + std::to_string(batch.cols) +
                          " columns, network expects " + std::to_string(net.input_dim()));
    }
    if (cache) {
        cache->input = batch;
        cache->pre.resize(net.layers.size());
        cache->post.resize(net.layers.size());
        cache->sigma.assign(net.layers.size(), 1.0);
        cache->normalized.assign(net.layers.size(), false);
    }
    Matrix current = batch;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const Layer& layer = net.layers[l];
        Matrix pre;
        if (layer.spectral_norm && sn && !sn->layers[l].u.empty()) {
            const double s = sn->layers[l].sigma(layer.weight);
            if (s > 1e-12) {
                Matrix w_bar = layer.weight;
                for (double& x : w_bar.data) x /= s;
                pre = matmul(current, w_bar);
                if (cache) {
                    cache->sigma[l] = s;
                    cache->normalized[l] = true;
                }
            } else {
                pre = matmul(current, layer.weight);
            }
        } else {
            pre = matmul(current, layer.weight);
        }
        add_row_broadcast(pre, layer.bias);
        Matrix post;
        apply_activation(layer.activation, pre, post);
        if (cache) {
            cache->pre[l] = pre;
            cache->post[l] = post;
        }
        current = std::move(post);
    }
    return current;
}

Gradients backward(const Mlp& net, const ForwardCache& cache, const Matrix& out_grad,
                   const SpectralNormState* sn) {
    const std::size_t n_layers = net.layers.size();
    assert(cache.pre.size() == n_layers);
    assert(out_grad.same_shape(cache.post.back()));

    Gradients grads;
    grads.weight.resize(n_layers);
    grads.bias.resize(n_layers);

    Matrix delta = out_grad;
    for (std::size_t l = n_layers; l-- > 0;) {
        const Layer& layer = net.layers[l];
        apply_activation_grad(layer.activation, cache.pre[l], cache.post[l], delta);

        grads.bias[l].assign(layer.bias.size(), 0.0);
        for (int r = 0; r < delta.rows; ++r) {
            const double* row = delta.data.data() + static_cast<std::size_t>(r) * delta.cols;
            for (int c = 0; c < delta.cols; ++c) grads.bias[l][c] += row[c];
        }

        const Matrix& input = l == 0 ? cache.input : cache.post[l - 1];
        Matrix w_bar_grad = matmul_trans_a(input, delta);

        if (cache.normalized[l]) {
            const double s = cache.sigma[l];
            const PowerIter& pi = sn->layers[l];
            // <G, W_bar>
            double inner = 0.0;
            for (std::size_t i = 0; i < w_bar_grad.data.size(); ++i) {
                inner += w_bar_grad.data[i] * layer.weight.data[i];
            }
            inner /= s;  // now <G, W>/sigma^2 after the division below
            Matrix wg(layer.weight.rows, layer.weight.cols);
            for (int r = 0; r < wg.rows; ++r) {
                for (int c = 0; c < wg.cols; ++c) {
                    wg.at(r, c) = w_bar_grad.at(r, c) / s - inner / s * pi.u[r] * pi.v[c];
                }
            }
            grads.weight[l] = std::move(wg);

            Matrix w_bar = layer.weight;
            for (double& x : w_bar.data) x /= s;
            delta = matmul_trans_b(delta, w_bar);
        } else {
            grads.weight[l] = std::move(w_bar_grad);
            delta = matmul_trans_b(delta, layer.weight);
        }
    }
    grads.input = std::move(delta);
    return grads;
}

} // namespace cugan
