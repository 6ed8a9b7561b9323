#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cugan {

/// Seeded random stream with hand-rolled distributions.
///
/// Every consumer of randomness in the library owns one of these. The draw
/// sequence is pinned by this class alone (no std::*_distribution state), so
/// identical keys reproduce identical streams on any platform.
class RngStream {
public:
    /// Derive an independent stream from a key such as {root_seed, stream_id}.
    RngStream(std::initializer_list<std::uint64_t> key);
    explicit RngStream(std::uint64_t seed) : RngStream({seed}) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double gaussian();

    /// Unbiased integer in [0, n). Requires n >= 1.
    int uniform_int(int n);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace cugan
