#pragma once

#include <cstdint>

namespace chaoshash {

// SplitMix64. Chosen over <random> engines because the whole algorithm fits
// in a short paragraph and reproduces bit-for-bit on any platform, which the
// seeded experiments and their golden outputs depend on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, bound) by plain modulo; bound must be
    // nonzero. All bounds used here are tiny against 2^64.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    bool next_bool() { return next() & 1u; }

    // Seed for the independent sub-generator of trial `counter` of a run.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t counter) {
        return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (counter + 1))).next();
    }

private:
    std::uint64_t state_;
};

}  // namespace chaoshash
