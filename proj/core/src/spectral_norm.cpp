#include "cugan/spectral_norm.hpp"

#include <cmath>

namespace cugan {
namespace {

void normalize_in_place(std::vector<double>& v) {
    const double n = l2_norm(v);
    if (n > 0.0) {
        for (double& x : v) x /= n;
    }
}

} // namespace

PowerIter PowerIter::init(const Matrix& w, RngStream& rng) {
    PowerIter p;
    p.u.resize(static_cast<std::size_t>(w.rows));
    for (double& x : p.u) x = rng.gaussian();
    normalize_in_place(p.u);
    p.v = matvec_trans(w, p.u);
    normalize_in_place(p.v);
    return p;
}

void PowerIter::iterate(const Matrix& w, int iterations) {
    for (int i = 0; i < iterations; ++i) {
        v = matvec_trans(w, u);
        normalize_in_place(v);
        u = matvec(w, v);
        normalize_in_place(u);
    }
}

double PowerIter::sigma(const Matrix& w) const {
    return dot(u, matvec(w, v));
}

Matrix spectral_normalize(const PowerIter& state, const Matrix& weight) {
    const double s = state.sigma(weight);
    if (!(s > 1e-12)) return weight;
    Matrix out = weight;
    for (double& x : out.data) x /= s;
    return out;
}

SpectralNormState SpectralNormState::init(const Mlp& net, RngStream& rng) {
    SpectralNormState state;
    state.layers.resize(net.layers.size());
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        if (net.layers[i].spectral_norm) {
            state.layers[i] = PowerIter::init(net.layers[i].weight, rng);
        }
    }
    return state;
}

void SpectralNormState::power_iterate(const Mlp& net, int iterations) {
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        if (net.layers[i].spectral_norm && !layers[i].u.empty()) {
            layers[i].iterate(net.layers[i].weight, iterations);
        }
    }
}

} // namespace cugan
