#pragma once

#include <cstdint>

namespace satgraph {

// splitmix64: the fixed generator behind every seeded choice in this
// project, so seeded outputs are reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0.  Modulo bias is accepted as part of
    // the documented contract.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace satgraph
