#include "cugan/rng.hpp"

#include <cmath>

namespace cugan {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::initializer_list<std::uint64_t> key) {
    std::uint64_t acc = 0x8f1bbcdcbfa53e0bULL;
    for (std::uint64_t k : key) {
        acc ^= k + 0x2545f4914f6cdd1dULL + (acc << 6) + (acc >> 2);
        acc = splitmix64(acc);
    }
    engine_.seed(splitmix64(acc));
}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

int RngStream::uniform_int(int n) {
    auto bound = static_cast<std::uint64_t>(n);
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x > limit);
    return static_cast<int>(x % bound);
}

} // namespace cugan
