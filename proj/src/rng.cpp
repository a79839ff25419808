#include "covhole/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace covhole {

namespace {

// splitmix64 finalizer
std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : state_(avalanche(avalanche(master_seed + kGamma) + stream_index)) {}

std::uint64_t RngStream::next_u64() {
    state_ += kGamma;
    return avalanche(state_);
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
    return a + (b - a) * uniform();
}

long RngStream::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw std::invalid_argument("poisson: mean must be finite and non-negative");
    }
    // Knuth's product method, chunked so exp(-mean) stays well away from
    // the underflow threshold.
    long count = 0;
    while (mean > 0.0) {
        double chunk = mean > 500.0 ? 500.0 : mean;
        mean -= chunk;
        double limit = std::exp(-chunk);
        double prod = uniform();
        while (prod > limit) {
            ++count;
            prod *= uniform();
        }
    }
    return count;
}

}  // namespace covhole
