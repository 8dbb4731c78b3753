#include "proglab/rule.hpp"

#include <string>

#include "proglab/error.hpp"

namespace proglab {

RuleTable rule_from_code(std::uint64_t code, int radius) {
    if (radius != 1 && radius != 2)
        throw ValidationError("radius must be 1 or 2, got " +
                              std::to_string(radius));
    const std::uint32_t entries = 1u << (2 * radius + 1);
    if (entries < 64 && code >= (std::uint64_t{1} << entries))
        throw ValidationError("rule code " + std::to_string(code) +
                              " out of range, must be < 2^" +
                              std::to_string(entries));
    // radius 2: entries == 32, any code < 2^32
    if (entries == 32 && code > 0xFFFFFFFFULL)
        throw ValidationError("rule code " + std::to_string(code) +
                              " out of range, must be < 2^32");

    RuleTable rule;
    rule.radius = radius;
    rule.code = code;
    rule.table.resize(entries);
    for (std::uint32_t i = 0; i < entries; ++i)
        rule.table[i] = static_cast<std::uint8_t>((code >> i) & 1);
    return rule;
}

std::uint64_t code_of(std::span<const std::uint8_t> table) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i]) code |= std::uint64_t{1} << i;
    return code;
}

namespace {

std::uint32_t reverse_bits(std::uint32_t v, int nbits) {
    std::uint32_t out = 0;
    for (int b = 0; b < nbits; ++b)
        if ((v >> b) & 1) out |= 1u << (nbits - 1 - b);
    return out;
}

RuleTable from_table(std::vector<std::uint8_t> table, int radius) {
    RuleTable rule;
    rule.radius = radius;
    rule.code = code_of(table);
    rule.table = std::move(table);
    return rule;
}

} // namespace

RuleTable mirror(const RuleTable& rule) {
    const int nbits = 2 * rule.radius + 1;
    std::vector<std::uint8_t> table(rule.table.size());
    for (std::uint32_t i = 0; i < rule.table.size(); ++i)
        table[i] = rule.table[reverse_bits(i, nbits)];
    return from_table(std::move(table), rule.radius);
}

RuleTable complement(const RuleTable& rule) {
    const std::uint32_t mask =
        static_cast<std::uint32_t>(rule.table.size() - 1);
    std::vector<std::uint8_t> table(rule.table.size());
    for (std::uint32_t i = 0; i < rule.table.size(); ++i)
        table[i] = rule.table[~i & mask] ? 0 : 1;
    return from_table(std::move(table), rule.radius);
}

} // namespace proglab
