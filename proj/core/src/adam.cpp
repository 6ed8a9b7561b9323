#include "cugan/adam.hpp"

#include <cassert>
#include <cmath>

namespace cugan {

void adam_update(std::span<double> params, std::span<const double> grads,
                 std::span<double> m, std::span<double> v, long t,
                 const AdamConfig& cfg) {
    assert(params.size() == grads.size());
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i];
        m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g;
        v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g * g;
        const double m_hat = m[i] / bc1;
        const double v_hat = v[i] / bc2;
        params[i] -= cfg.lr * m_hat / (std::sqrt(v_hat) + cfg.eps);
    }
}

AdamState::AdamState(const Mlp& net, AdamConfig cfg) : cfg_(cfg) {
    m_w_.resize(net.layers.size());
    v_w_.resize(net.layers.size());
    m_b_.resize(net.layers.size());
    v_b_.resize(net.layers.size());
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        m_w_[l].assign(net.layers[l].weight.data.size(), 0.0);
        v_w_[l].assign(net.layers[l].weight.data.size(), 0.0);
        m_b_[l].assign(net.layers[l].bias.size(), 0.0);
        v_b_[l].assign(net.layers[l].bias.size(), 0.0);
    }
}

void AdamState::step(Mlp& net, const Gradients& grads) {
    ++step_;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        adam_update(net.layers[l].weight.data, grads.weight[l].data, m_w_[l], v_w_[l],
                    step_, cfg_);
        adam_update(net.layers[l].bias, grads.bias[l], m_b_[l], v_b_[l], step_, cfg_);
    }
}

} // namespace cugan
