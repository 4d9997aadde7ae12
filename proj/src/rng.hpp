#pragma once

#include <cmath>
#include <cstdint>

namespace laglab {

// SplitMix64. Small, fast, and identical on every platform, which keeps
// multistart trajectories reproducible from a seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1); never returns 0 so -log() is always finite
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // uniform integer in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    double next_exponential() { return -std::log(next_unit()); }

private:
    std::uint64_t state_;
};

// Stream for start index k derived from the base seed; independent of how
// many starts run or in which order.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t k) {
    SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ull * (k + 1)));
    mix.next_u64();
    return mix;
}

}  // namespace laglab
