#ifndef COVHOLE_RNG_HPP
#define COVHOLE_RNG_HPP

#include <cstdint>

namespace covhole {

/**
 * Counter-based splittable random stream.
 *
 * Stream i of a master seed is obtained by pushing (seed, i) through a
 * 64-bit avalanche mixer, so distinct indices give statistically
 * independent streams and the same (seed, index) pair always replays the
 * same draws.  This is what makes parallel Monte Carlo runs reproducible
 * regardless of how trials are scheduled onto threads.
 */
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /** Uniform double in [0, 1). */
    double uniform();

    /** Uniform double in [a, b). */
    double uniform(double a, double b);

    /** Poisson variate; valid for any non-negative finite mean. */
    long poisson(double mean);

  private:
    std::uint64_t state_;
};

}  // namespace covhole

#endif
