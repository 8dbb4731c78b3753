#include "proglab/eca.hpp"

#include <array>
#include <string>

#include "proglab/error.hpp"

namespace proglab {

namespace {

void check_width(const RuleTable& rule, const Configuration& config) {
    const std::uint32_t min_width = 2u * rule.radius + 1;
    if (config.width() < min_width)
        throw ValidationError("tape width " + std::to_string(config.width()) +
                              " below minimum " + std::to_string(min_width) +
                              " for radius " + std::to_string(rule.radius));
}

} // namespace

BitRow step(const RuleTable& rule, const Configuration& config) {
    check_width(rule, config);
    const int r = rule.radius;
    const int n = 2 * r + 1;

    // Neighbor views: shifted[p][x] = config[(x + p - r) mod w], so p = 0 is
    // the leftmost cell of the neighborhood around x.
    std::array<BitRow, 5> shifted;
    for (int p = 0; p < n; ++p) shifted[p] = config.rotated(p - r);

    BitRow out(config.width());
    const std::size_t nw = out.word_count();
    const std::uint32_t entries = rule.neighborhood_count();

#pragma omp parallel for schedule(static) if (nw >= 4096)
    for (std::size_t wi = 0; wi < nw; ++wi) {
        std::uint64_t acc = 0;
        for (std::uint32_t idx = 0; idx < entries; ++idx) {
            if (!rule.table[idx]) continue;
            // Minterm: neighborhood equals idx, leftmost cell = msb of idx.
            std::uint64_t term = ~std::uint64_t{0};
            for (int p = 0; p < n; ++p) {
                const std::uint64_t w = shifted[p].word(wi);
                term &= ((idx >> (n - 1 - p)) & 1) ? w : ~w;
            }
            acc |= term;
        }
        out.word(wi) = acc;
    }
    out.mask_tail();
    return out;
}

BitRow step_reference(const RuleTable& rule, const Configuration& config) {
    check_width(rule, config);
    const int r = rule.radius;
    const int n = 2 * r + 1;
    const std::int64_t w = config.width();
    BitRow out(config.width());
    for (std::int64_t x = 0; x < w; ++x) {
        std::uint32_t idx = 0;
        for (int p = 0; p < n; ++p) {
            const std::int64_t pos = ((x + p - r) % w + w) % w;
            idx = (idx << 1) | (config.get(static_cast<std::uint32_t>(pos)) ? 1 : 0);
        }
        out.set(static_cast<std::uint32_t>(x), rule.table[idx] != 0);
    }
    return out;
}

SpaceTimeDiagram evolve(const RuleTable& rule, const Configuration& config,
                        std::uint32_t steps) {
    SpaceTimeDiagram diagram;
    diagram.rule = rule;
    diagram.rows.reserve(steps + 1);
    diagram.rows.push_back(config);
    for (std::uint32_t t = 0; t < steps; ++t)
        diagram.rows.push_back(step(rule, diagram.rows.back()));
    return diagram;
}

std::vector<std::uint8_t> column(const SpaceTimeDiagram& diagram,
                                 std::uint32_t x) {
    if (x >= diagram.width())
        throw ValidationError("column index " + std::to_string(x) +
                              " out of range for width " +
                              std::to_string(diagram.width()));
    std::vector<std::uint8_t> out;
    out.reserve(diagram.rows.size());
    for (const auto& row : diagram.rows) out.push_back(row.get(x) ? 1 : 0);
    return out;
}

std::vector<std::uint8_t> center_column(const SpaceTimeDiagram& diagram) {
    if (diagram.width() % 2 == 0)
        throw ValidationError(
            "center column undefined for even width; pass a column index");
    return column(diagram, diagram.width() / 2);
}

Configuration single_one(std::uint32_t width) {
    Configuration c(width);
    c.set(width / 2, true);
    return c;
}

} // namespace proglab
