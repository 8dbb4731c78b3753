#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "proglab/eca.hpp"

namespace proglab {

// Partial view of a space-time evolution on a cyclic tape: a sparse set of
// (t, x) -> value observations.
class ObservationWindow {
public:
    explicit ObservationWindow(std::uint32_t width);

    // Throws if x is out of range or (t,x) was already observed with the
    // other value; re-adding the same value is a no-op.
    void add(std::uint32_t t, std::uint32_t x, bool value);

    std::uint32_t width() const { return width_; }
    const std::map<std::pair<std::uint32_t, std::uint32_t>, bool>& cells()
        const {
        return cells_;
    }
    bool contains(std::uint32_t t, std::uint32_t x) const;
    bool value(std::uint32_t t, std::uint32_t x) const;

    // Fully observe rows [0, T] of a diagram.
    static ObservationWindow full(const SpaceTimeDiagram& diagram);

private:
    std::uint32_t width_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> cells_;
};

// Partially determined rule table extracted from observations.
struct ConstraintTable {
    int radius = 1;
    std::vector<std::int8_t> entries;  // -1 unknown, else 0/1; size 2^(2r+1)
    bool contradiction = false;

    std::uint32_t constrained_count() const;
    std::uint32_t free_count() const;
};

// For every observed (t>=1, x) whose full radius-r neighborhood at t-1 is
// observed, record table[neighborhood] = value.
ConstraintTable collect_constraints(const ObservationWindow& window,
                                    int radius);

// 0 on contradiction, else 2^free_count.
std::uint64_t consistent_count(const ConstraintTable& table);

// All radius-1 rules agreeing with every constraint, ascending code order.
std::vector<RuleTable> enumerate_consistent(const ConstraintTable& table);

struct IdentifyResult {
    enum class Kind { Unique, Ambiguous, Contradiction };
    Kind kind = Kind::Ambiguous;
    std::uint64_t code = 0;        // valid when kind == Unique
    std::uint64_t candidates = 0;  // consistent radius-1 rule count
};

// Radius-1 verdict for a window.
IdentifyResult identify(const ObservationWindow& window);

// Consistent-rule count for the same window in the radius-2 space.
std::uint64_t overfit_count(const ObservationWindow& window);

} // namespace proglab
