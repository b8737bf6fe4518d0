#include "cybug/prng.hpp"

namespace cybug::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Prng::Prng(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Prng::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

int Prng::uniform(int n) {
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = ~0ULL - ~0ULL % span;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return static_cast<int>(draw % span) + 1;
}

}  // namespace cybug::sim
