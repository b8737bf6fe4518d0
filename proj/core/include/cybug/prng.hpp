#pragma once

#include <cstdint>

namespace cybug::sim {

// Deterministic 64-bit generator: Marsaglia xorshift64* (shifts 12/25/27,
// multiplier 0x2545F4914F6CDD1D). The raw seed is scrambled through one
// SplitMix64 step so that small consecutive seeds give unrelated streams,
// and the all-zero state (illegal for xorshift) cannot occur.
class Prng {
public:
    explicit Prng(std::uint64_t seed);

    std::uint64_t next();

    // Uniform draw from 1..n (n ≥ 1), bias-free via rejection sampling.
    int uniform(int n);

private:
    std::uint64_t state_;
};

}  // namespace cybug::sim
