#pragma once

// SplitMix64 (Steele, Lea, Flood 2014), the fixed generator behind every
// simulation in this library. Chosen over a platform default so that a
// (seed, sample count, worker count) triple pins the byte-exact result on
// any conforming platform or reimplementation.

#include <cstdint>

namespace boxvol {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1): the top 53 bits scaled by 2^-53.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace boxvol
