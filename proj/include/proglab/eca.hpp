#pragma once

#include <cstdint>
#include <vector>

#include "proglab/bitrow.hpp"
#include "proglab/rule.hpp"

namespace proglab {

// A tape state; boundaries are always cyclic.
using Configuration = BitRow;

struct SpaceTimeDiagram {
    RuleTable rule;
    std::vector<BitRow> rows;  // rows[0] = initial configuration

    std::uint32_t width() const { return rows.empty() ? 0 : rows[0].width(); }
    std::uint32_t steps() const {
        return static_cast<std::uint32_t>(rows.size()) - 1;
    }
};

// One synchronous update, word-parallel over the packed row.
BitRow step(const RuleTable& rule, const Configuration& config);

// Cell-at-a-time update. Slow; kept as the oracle the packed kernel is
// tested against and as the baseline in the benchmark.
BitRow step_reference(const RuleTable& rule, const Configuration& config);

SpaceTimeDiagram evolve(const RuleTable& rule, const Configuration& config,
                        std::uint32_t steps);

// Column at index x, rows 0..T, one byte per cell.
std::vector<std::uint8_t> column(const SpaceTimeDiagram& diagram,
                                 std::uint32_t x);
// Center column; width must be odd.
std::vector<std::uint8_t> center_column(const SpaceTimeDiagram& diagram);

// Width-w tape with a single 1 at w/2.
Configuration single_one(std::uint32_t width);

} // namespace proglab
