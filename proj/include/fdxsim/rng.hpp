// Counter-based random number generator (SplitMix64) with substream
// derivation, so every Monte Carlo trial owns an independent stream that is
// reproducible regardless of execution order or thread count.

#ifndef FDXSIM_RNG_HPP
#define FDXSIM_RNG_HPP

#include <cstdint>

#include "fdxsim/linalg.hpp"

namespace fdx {

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream keyed by (seed, a, b). Same key, same stream.
    static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

    std::uint64_t next_u64();

    /// Uniform on (0, 1].
    double uniform();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer on [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

    /// One draw from CN(0,1): real/imag independent Gaussian, variance 1/2
    /// each. Consumes exactly two uniforms, so streams chunk consistently.
    cplx sample_cn();

private:
    std::uint64_t state_;
};

/// n i.i.d. CN(0,1) draws. Throws std::invalid_argument for n < 1.
CVec sample_cn(Rng& rng, int n);

}  // namespace fdx

#endif
