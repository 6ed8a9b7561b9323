#pragma once

#include <span>
#include <vector>

#include "cugan/mlp.hpp"

namespace cugan {

struct AdamConfig {
    double lr = 2e-4;
    double beta1 = 0.5;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// In-place Adam update with bias correction; t is the 1-based step count.
void adam_update(std::span<double> params, std::span<const double> grads,
                 std::span<double> m, std::span<double> v, long t,
                 const AdamConfig& cfg);

/// Moment accumulators shaped like a network's parameters.
class AdamState {
public:
    AdamState() = default;
    AdamState(const Mlp& net, AdamConfig cfg);

    void step(Mlp& net, const Gradients& grads);
    long step_count() const { return step_; }
    const AdamConfig& config() const { return cfg_; }

private:
    AdamConfig cfg_;
    long step_ = 0;
    std::vector<std::vector<double>> m_w_, v_w_;
    std::vector<std::vector<double>> m_b_, v_b_;
};

} // namespace cugan
