#pragma once

#include <cstdint>

namespace stormpath {

/// SplitMix64 finalizer: a bijective 64-bit avalanche mix.
/// Used both as the generator's output stage and for seed derivation.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 pseudorandom generator (Steele, Lea, Flood 2014; Vigna's
/// fixed-increment variant). 64 bits of state, passes BigCrush, and cheap
/// to copy -- which keeps run state a plain value.
class SplitMix64 {
public:
    SplitMix64() = default;
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1): top 53 bits of the next output.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi). Returns lo exactly when lo == hi.
    constexpr double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_ = 0;
};

}  // namespace stormpath
