#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mediocre {

/// SplitMix64 generator.
///
/// The state advances by the golden-ratio increment 0x9E3779B97F4A7C15 and each
/// output is the state passed through the finalizer
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
/// so a stream is fully determined by its 64-bit seed and can be reproduced
/// in any language with unsigned 64-bit arithmetic.
class Rng {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t increment = 0x9E3779B97F4A7C15ULL;

    explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type next() noexcept {
        state_ += increment;
        return mix(state_);
    }

    constexpr result_type operator()() noexcept { return next(); }

    /// Uniform draw in [0, bound).
    ///
    /// Outputs below (2^64 mod bound) are rejected, the rest are reduced
    /// modulo bound, which removes the modulo bias exactly.
    constexpr std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("Rng::below: bound must be positive");
        }
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    /// Independent child generator seeded from this stream's next output.
    constexpr Rng split() noexcept { return Rng{next()}; }

    /// Generator for numbered sub-stream `stream` of `seed`; never consumes
    /// from any existing generator.
    static constexpr Rng derive(std::uint64_t seed, std::uint64_t stream) noexcept {
        return Rng{mix(seed + (stream + 1) * increment)};
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace mediocre
