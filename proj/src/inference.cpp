#include "proglab/inference.hpp"

#include <string>

#include "proglab/error.hpp"

namespace proglab {

ObservationWindow::ObservationWindow(std::uint32_t width) : width_(width) {
    if (width < 1) throw ValidationError("window width must be >= 1");
}

void ObservationWindow::add(std::uint32_t t, std::uint32_t x, bool value) {
    if (x >= width_)
        throw ValidationError("observation position " + std::to_string(x) +
                              " out of range for width " +
                              std::to_string(width_));
    auto [it, inserted] = cells_.try_emplace({t, x}, value);
    if (!inserted && it->second != value)
        throw ValidationError("conflicting observations at t=" +
                              std::to_string(t) + " x=" + std::to_string(x));
}

bool ObservationWindow::contains(std::uint32_t t, std::uint32_t x) const {
    return cells_.contains({t, x});
}

bool ObservationWindow::value(std::uint32_t t, std::uint32_t x) const {
    return cells_.at({t, x});
}

ObservationWindow ObservationWindow::full(const SpaceTimeDiagram& diagram) {
    ObservationWindow window(diagram.width());
    for (std::uint32_t t = 0; t < diagram.rows.size(); ++t)
        for (std::uint32_t x = 0; x < diagram.width(); ++x)
            window.add(t, x, diagram.rows[t].get(x));
    return window;
}

std::uint32_t ConstraintTable::constrained_count() const {
    std::uint32_t n = 0;
    for (auto e : entries)
        if (e >= 0) ++n;
    return n;
}

std::uint32_t ConstraintTable::free_count() const {
    return static_cast<std::uint32_t>(entries.size()) - constrained_count();
}

ConstraintTable collect_constraints(const ObservationWindow& window,
                                    int radius) {
    if (radius != 1 && radius != 2)
        throw ValidationError("radius must be 1 or 2");
    const int n = 2 * radius + 1;
    const std::int64_t w = window.width();

    ConstraintTable table;
    table.radius = radius;
    table.entries.assign(std::size_t{1} << n, -1);

    for (const auto& [key, value] : window.cells()) {
        const auto [t, x] = key;
        if (t < 1) continue;
        // Need the whole neighborhood at t-1, cyclically.
        std::uint32_t idx = 0;
        bool complete = true;
        for (int p = 0; p < n; ++p) {
            const std::int64_t pos =
                ((static_cast<std::int64_t>(x) + p - radius) % w + w) % w;
            const auto px = static_cast<std::uint32_t>(pos);
            if (!window.contains(t - 1, px)) {
                complete = false;
                break;
            }
            idx = (idx << 1) | (window.value(t - 1, px) ? 1 : 0);
        }
        if (!complete) continue;
        const std::int8_t bit = value ? 1 : 0;
        if (table.entries[idx] == -1)
            table.entries[idx] = bit;
        else if (table.entries[idx] != bit)
            table.contradiction = true;
    }
    return table;
}

std::uint64_t consistent_count(const ConstraintTable& table) {
    if (table.contradiction) return 0;
    return std::uint64_t{1} << table.free_count();
}

std::vector<RuleTable> enumerate_consistent(const ConstraintTable& table) {
    if (table.radius != 1)
        throw ValidationError(
            "enumeration supported only for radius 1; use consistent_count");
    std::vector<RuleTable> rules;
    if (table.contradiction) return rules;
    for (std::uint64_t code = 0; code < 256; ++code) {
        bool ok = true;
        for (std::uint32_t i = 0; i < 8; ++i) {
            if (table.entries[i] == -1) continue;
            if (static_cast<std::int8_t>((code >> i) & 1) != table.entries[i]) {
                ok = false;
                break;
            }
        }
        if (ok) rules.push_back(rule_from_code(code, 1));
    }
    return rules;
}

IdentifyResult identify(const ObservationWindow& window) {
    const ConstraintTable table = collect_constraints(window, 1);
    IdentifyResult result;
    result.candidates = consistent_count(table);
    if (table.contradiction) {
        result.kind = IdentifyResult::Kind::Contradiction;
    } else if (table.free_count() == 0) {
        result.kind = IdentifyResult::Kind::Unique;
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < 8; ++i)
            if (table.entries[i] == 1) code |= std::uint64_t{1} << i;
        result.code = code;
    } else {
        result.kind = IdentifyResult::Kind::Ambiguous;
    }
    return result;
}

std::uint64_t overfit_count(const ObservationWindow& window) {
    return consistent_count(collect_constraints(window, 2));
}

} // namespace proglab
