#pragma once

// Test-only oracles, independent of the library implementation paths they
// check.

#include <algorithm>
#include <cmath>

#include "cugan/matrix.hpp"

namespace cugan::testing {

/// Largest singular value via cyclic Jacobi on W^T W. Exact to machine
/// precision for the small matrices used in tests.
inline double svd_largest_singular_value(const Matrix& w) {
    const int n = w.cols;
    Matrix b = matmul_trans_a(w, w);
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(b.at(p, q)));
        }
        if (off < 1e-14) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(b.at(p, q)) < 1e-300) continue;
                const double theta =
                    0.5 * std::atan2(2.0 * b.at(p, q), b.at(q, q) - b.at(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (int i = 0; i < n; ++i) {
                    const double bip = b.at(i, p), biq = b.at(i, q);
                    b.at(i, p) = c * bip - s * biq;
                    b.at(i, q) = s * bip + c * biq;
                }
                for (int i = 0; i < n; ++i) {
                    const double bpi = b.at(p, i), bqi = b.at(q, i);
                    b.at(p, i) = c * bpi - s * bqi;
                    b.at(q, i) = s * bpi + c * bqi;
                }
            }
        }
    }
    double lambda_max = 0.0;
    for (int i = 0; i < n; ++i) lambda_max = std::max(lambda_max, b.at(i, i));
    return std::sqrt(lambda_max);
}

} // namespace cugan::testing
