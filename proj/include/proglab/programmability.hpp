#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "proglab/eca.hpp"

namespace proglab {

// Input ensemble: for each density, tapes whose cells are 1 with that
// probability, drawn from the seeded generator. When mirror_closed, half of
// each density's tapes are random and the other half their reversals.
struct EnsembleSpec {
    std::uint32_t width = 256;
    std::vector<double> densities = {0.1, 0.2, 0.3, 0.4, 0.5,
                                     0.6, 0.7, 0.8, 0.9};
    std::uint32_t samples_per_density = 8;
    std::uint64_t seed = 0x5EED;
    bool mirror_closed = true;
};

std::vector<Configuration> build_ensemble(const EnsembleSpec& spec);

// How a diagram's output (rows 1..T; the input row is the question, not the
// answer) is turned into the bit sequence handed to the compressor.
enum class SerializeMode { Diagram, Rows, CenterColumn };

SerializeMode serialize_mode_from_string(const std::string& s);
const char* to_string(SerializeMode mode);

struct BehaviouralProfile {
    std::uint64_t rule_code = 0;
    std::vector<std::uint64_t> input_c;   // compressed bits of each input row
    std::vector<std::uint64_t> output_c;  // compressed bits of each output
    double variability = 0.0;             // V
    double controllability = 0.0;         // S
    double programmability = 0.0;         // P = V * S
};

// Coefficient of variation (population std / mean) clamped to [0,1];
// 0 when the mean is 0 or all values are equal.
double variability(std::span<const std::uint64_t> output_c);

// Spearman rank correlation (average ranks on ties) clamped to [0,1];
// 0 when either list has zero variance.
double controllability(std::span<const std::uint64_t> input_c,
                       std::span<const std::uint64_t> output_c);

// Raw Spearman coefficient in [-1,1], exposed for testing.
double spearman(std::span<const double> a, std::span<const double> b);

BehaviouralProfile interrogate(const RuleTable& rule, const EnsembleSpec& spec,
                               std::uint32_t steps,
                               SerializeMode mode = SerializeMode::Diagram);

// One profile per rule, sorted by P descending, ties by code ascending.
std::vector<BehaviouralProfile> classify(
    std::span<const std::uint64_t> rule_codes, const EnsembleSpec& spec,
    std::uint32_t steps, SerializeMode mode = SerializeMode::Diagram);

} // namespace proglab
