#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace proglab {

// A local update rule under Wolfram's enumeration. table[i] is the output
// for neighborhood value i, where the leftmost cell is the most significant
// bit (radius 1: i = 4*left + 2*center + right). table[i] equals bit i of
// code, so rule 30 has table[7..0] = 0,0,0,1,1,1,1,0.
struct RuleTable {
    int radius = 1;                   // 1 or 2
    std::uint64_t code = 0;
    std::vector<std::uint8_t> table;  // size 2^(2r+1)

    std::uint32_t neighborhood_count() const {
        return 1u << (2 * radius + 1);
    }
};

RuleTable rule_from_code(std::uint64_t code, int radius);
std::uint64_t code_of(std::span<const std::uint8_t> table);

// Same rule with every neighborhood read right-to-left.
RuleTable mirror(const RuleTable& rule);
// Same rule with all cell values complemented in neighborhoods and outputs.
RuleTable complement(const RuleTable& rule);

} // namespace proglab
