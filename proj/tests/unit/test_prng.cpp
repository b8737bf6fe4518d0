#include "doctest.h"

#include <array>
#include <set>

#include "cybug/prng.hpp"

using cybug::sim::Prng;

TEST_CASE("known streams match independently derived values") {
    // First four outputs for seeds 0 and 42, computed outside this
    // codebase from the published xorshift64* + SplitMix64 definitions.
    Prng zero(0);
    CHECK(zero.next() == 0x7bbcb40d550682d0ULL);
    CHECK(zero.next() == 0xde7fe413d00cc9fdULL);
    CHECK(zero.next() == 0xb3c638353c668c91ULL);
    CHECK(zero.next() == 0xe073afc0949195fcULL);

    Prng fortytwo(42);
    CHECK(fortytwo.next() == 0x31b0ece7c4f697a2ULL);
    CHECK(fortytwo.next() == 0x9008a3b1cb686f03ULL);
    CHECK(fortytwo.next() == 0x7c7173abd97be16fULL);
    CHECK(fortytwo.next() == 0x45672c8c8d6b8c4fULL);
}

TEST_CASE("same seed, same stream; nearby seeds, different streams") {
    Prng a(7), b(7), c(8);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 64; ++i) {
        auto va = a.next();
        all_equal = all_equal && (va == b.next());
        any_diff = any_diff || (va != c.next());
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("uniform stays in 1..n and hits every value") {
    Prng prng(123);
    std::array<int, 6> histogram{};
    for (int i = 0; i < 6000; ++i) {
        int v = prng.uniform(6);
        REQUIRE(v >= 1);
        REQUIRE(v <= 6);
        ++histogram[v - 1];
    }
    for (int count : histogram) {
        CHECK(count > 800);  // 1000 expected; misses only under heavy bias
        CHECK(count < 1200);
    }
}

TEST_CASE("uniform(1) is always 1") {
    Prng prng(99);
    for (int i = 0; i < 100; ++i) CHECK(prng.uniform(1) == 1);
}

TEST_CASE("distinct seeds give largely distinct first draws") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) seen.insert(Prng(seed).next());
    CHECK(seen.size() == 1000);
}
