#include "fdxsim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdx {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(mix64(seed + kGamma)) {}

Rng Rng::substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // Absorb the stream key through the finalizer so nearby keys land far
    // apart in state space.
    std::uint64_t s = mix64(seed + kGamma);
    s = mix64(s ^ (a + 0xD1B54A32D192ED03ULL));
    s = mix64(s ^ (b + 0x8CB92BA72F3D8DD7ULL));
    Rng rng(0);
    rng.state_ = s;
    return rng;
}

std::uint64_t Rng::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double Rng::uniform() {
    // (0, 1]: keeps log() in sample_cn well defined.
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * (uniform() - 0x1.0p-53);
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

cplx Rng::sample_cn() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phase = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
}

CVec sample_cn(Rng& rng, int n) {
    if (n < 1) throw std::invalid_argument("sample_cn: n must be >= 1");
    CVec out(n);
    for (int i = 0; i < n; ++i) out(i) = rng.sample_cn();
    return out;
}

}  // namespace fdx
