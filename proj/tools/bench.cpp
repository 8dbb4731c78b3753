// Throughput comparison of the word-parallel stepping kernel against the
// cell-at-a-time reference, plus a perturbation-scan timing.

#include <chrono>
#include <cstdint>
#include <cstdio>

#include "proglab/eca.hpp"
#include "proglab/perturb.hpp"
#include "proglab/prng.hpp"

using namespace proglab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Configuration random_tape(std::uint32_t width, std::uint64_t seed) {
    Xoshiro256StarStar rng(seed);
    Configuration c(width);
    for (std::uint32_t x = 0; x < width; ++x)
        if (rng.bernoulli(0.5)) c.set(x, true);
    return c;
}

} // namespace

int main() {
    const RuleTable rule = rule_from_code(30, 1);
    const std::uint32_t width = 1u << 16;
    const std::uint32_t steps = 4096;
    const double cells = static_cast<double>(width) * steps;
    const Configuration init = random_tape(width, 1);

    std::printf("stepping: rule 30, width %u, %u steps (%.0f cell updates)\n",
                width, steps, cells);

    Configuration row = init;
    auto t0 = Clock::now();
    for (std::uint32_t t = 0; t < steps; ++t) row = step_reference(rule, row);
    const double serial = seconds_since(t0);
    std::printf("  reference: %8.3f s  (%6.1f Mcell/s)\n", serial,
                cells / serial / 1e6);
    const Configuration serial_result = row;

    row = init;
    t0 = Clock::now();
    for (std::uint32_t t = 0; t < steps; ++t) row = step(rule, row);
    const double packed = seconds_since(t0);
    std::printf("  packed:    %8.3f s  (%6.1f Mcell/s)  speedup %.1fx\n",
                packed, cells / packed / 1e6, serial / packed);

    if (!(row == serial_result)) {
        std::printf("MISMATCH between kernels\n");
        return 1;
    }

    const Configuration base = random_tape(401, 2);
    t0 = Clock::now();
    const auto profiles = perturbation_scan(rule, base, 200);
    const double scan = seconds_since(t0);
    std::printf("perturbation scan: width %u, 200 steps: %.3f s (%zu sites)\n",
                base.width(), scan, profiles.size());
    return 0;
}
