#pragma once

#include <cstdint>

#include "proglab/bitrow.hpp"
#include "proglab/prng.hpp"

namespace proglab::testing {

inline BitRow random_tape(std::uint32_t width, Xoshiro256StarStar& rng,
                          double density = 0.5) {
    BitRow row(width);
    for (std::uint32_t x = 0; x < width; ++x)
        if (rng.bernoulli(density)) row.set(x, true);
    return row;
}

inline BitRow random_tape(std::uint32_t width, std::uint64_t seed,
                          double density = 0.5) {
    Xoshiro256StarStar rng(seed);
    return random_tape(width, rng, density);
}

} // namespace proglab::testing
