#pragma once

#include <cstdint>
#include <vector>

#include "proglab/eca.hpp"

namespace proglab {

// Cells to complement in an initial configuration.
struct PerturbationSpec {
    std::vector<std::uint32_t> flip_indices;  // unique, < width
};

Configuration flip(const Configuration& config, const PerturbationSpec& spec);

// Cellwise XOR of two equally shaped diagrams.
struct DifferenceDiagram {
    std::vector<BitRow> rows;

    std::uint32_t width() const { return rows.empty() ? 0 : rows[0].width(); }
    std::uint32_t steps() const {
        return static_cast<std::uint32_t>(rows.size()) - 1;
    }
};

DifferenceDiagram difference_diagram(const SpaceTimeDiagram& a,
                                     const SpaceTimeDiagram& b);

enum class Outcome { Extinct, Bounded, Spreading };
const char* to_string(Outcome o);

// Per-row statistics of a damage pattern. Fronts are signed offsets from the
// flip origin, cyclically folded into (-w/2, w/2]; they are meaningful only
// on rows with hamming > 0.
struct DamageProfile {
    std::vector<std::uint32_t> hamming;
    std::vector<std::int32_t> left_front;
    std::vector<std::int32_t> right_front;
    double speed = 0.0;  // (right_front[T] - right_front[0]) / T; 0 if extinct
    Outcome outcome = Outcome::Bounded;
    bool wrapped = false;  // fronts may have collided around the ring
};

// radius is the rule's radius, needed for the cyclic-wrap check.
DamageProfile damage_profile(const DifferenceDiagram& diff,
                             std::uint32_t flip_origin, int radius = 1);

// One profile per single-cell flip site, indexed by site.
std::vector<DamageProfile> perturbation_scan(const RuleTable& rule,
                                             const Configuration& base,
                                             std::uint32_t steps);

} // namespace proglab
