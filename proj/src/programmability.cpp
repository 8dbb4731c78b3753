#include "proglab/programmability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "proglab/error.hpp"
#include "proglab/lz78.hpp"
#include "proglab/prng.hpp"

namespace proglab {

std::vector<Configuration> build_ensemble(const EnsembleSpec& spec) {
    if (spec.densities.empty())
        throw ValidationError("ensemble needs at least one density");
    if (!std::is_sorted(spec.densities.begin(), spec.densities.end()) ||
        std::adjacent_find(spec.densities.begin(), spec.densities.end()) !=
            spec.densities.end())
        throw ValidationError("densities must be sorted ascending and distinct");
    for (double d : spec.densities)
        if (d < 0.0 || d > 1.0)
            throw ValidationError("density outside [0,1]");
    if (spec.samples_per_density < 1)
        throw ValidationError("samples_per_density must be >= 1");
    const std::size_t total =
        spec.densities.size() * spec.samples_per_density;
    if (total < 3)
        throw ValidationError("ensemble size " + std::to_string(total) +
                              " below minimum 3");
    if (spec.mirror_closed && spec.samples_per_density % 2 != 0)
        throw ValidationError(
            "mirror-closed ensembles need an even samples_per_density");

    Xoshiro256StarStar rng(spec.seed);
    std::vector<Configuration> ensemble;
    ensemble.reserve(total);
    for (double d : spec.densities) {
        const std::uint32_t fresh = spec.mirror_closed
                                        ? spec.samples_per_density / 2
                                        : spec.samples_per_density;
        const std::size_t first = ensemble.size();
        for (std::uint32_t s = 0; s < fresh; ++s) {
            Configuration tape(spec.width);
            for (std::uint32_t x = 0; x < spec.width; ++x)
                if (rng.bernoulli(d)) tape.set(x, true);
            ensemble.push_back(std::move(tape));
        }
        if (spec.mirror_closed)
            for (std::uint32_t s = 0; s < fresh; ++s)
                ensemble.push_back(ensemble[first + s].reversed());
    }
    return ensemble;
}

SerializeMode serialize_mode_from_string(const std::string& s) {
    if (s == "diagram") return SerializeMode::Diagram;
    if (s == "rows") return SerializeMode::Rows;
    if (s == "center-column") return SerializeMode::CenterColumn;
    throw ValidationError("unknown serialization mode '" + s +
                          "', expected diagram|rows|center-column");
}

const char* to_string(SerializeMode mode) {
    switch (mode) {
        case SerializeMode::Diagram: return "diagram";
        case SerializeMode::Rows: return "rows";
        case SerializeMode::CenterColumn: return "center-column";
    }
    return "?";
}

double variability(std::span<const std::uint64_t> output_c) {
    if (output_c.size() < 3)
        throw ValidationError("variability needs at least 3 values");
    const double n = static_cast<double>(output_c.size());
    double mean = 0.0;
    for (auto v : output_c) mean += static_cast<double>(v);
    mean /= n;
    if (mean == 0.0) return 0.0;
    double var = 0.0;
    for (auto v : output_c) {
        const double d = static_cast<double>(v) - mean;
        var += d * d;
    }
    var /= n;  // population variance
    const double cv = std::sqrt(var) / mean;
    return std::clamp(cv, 0.0, 1.0);
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double cab = 0, caa = 0, cbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        cab += da * db;
        caa += da * da;
        cbb += db * db;
    }
    if (caa == 0.0 || cbb == 0.0) return 0.0;
    return cab / std::sqrt(caa * cbb);
}

} // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ValidationError("spearman needs equal-length lists");
    const std::vector<double> ra = average_ranks(a);
    const std::vector<double> rb = average_ranks(b);
    return pearson(ra, rb);
}

double controllability(std::span<const std::uint64_t> input_c,
                       std::span<const std::uint64_t> output_c) {
    if (input_c.size() != output_c.size() || input_c.size() < 3)
        throw ValidationError(
            "controllability needs equal-length lists of size >= 3");
    std::vector<double> a(input_c.begin(), input_c.end());
    std::vector<double> b(output_c.begin(), output_c.end());
    return std::clamp(spearman(a, b), 0.0, 1.0);
}

namespace {

std::uint64_t output_compressed_bits(const SpaceTimeDiagram& diagram,
                                     SerializeMode mode) {
    switch (mode) {
        case SerializeMode::Diagram: {
            std::vector<std::uint8_t> bits;
            bits.reserve(static_cast<std::size_t>(diagram.width()) *
                         diagram.steps());
            for (std::size_t t = 1; t < diagram.rows.size(); ++t)
                diagram.rows[t].append_bits(bits);
            return lz78_compress(bits).bit_length;
        }
        case SerializeMode::Rows: {
            std::uint64_t total = 0;
            for (std::size_t t = 1; t < diagram.rows.size(); ++t)
                total += lz78_compress(diagram.rows[t].bits()).bit_length;
            return total;
        }
        case SerializeMode::CenterColumn: {
            std::vector<std::uint8_t> bits;
            const std::uint32_t x = diagram.width() / 2;
            for (std::size_t t = 1; t < diagram.rows.size(); ++t)
                bits.push_back(diagram.rows[t].get(x) ? 1 : 0);
            return lz78_compress(bits).bit_length;
        }
    }
    return 0;
}

} // namespace

BehaviouralProfile interrogate(const RuleTable& rule, const EnsembleSpec& spec,
                               std::uint32_t steps, SerializeMode mode) {
    if (steps < 1) throw ValidationError("interrogation needs steps >= 1");
    const std::vector<Configuration> ensemble = build_ensemble(spec);

    BehaviouralProfile profile;
    profile.rule_code = rule.code;
    profile.input_c.resize(ensemble.size());
    profile.output_c.resize(ensemble.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        profile.input_c[i] = lz78_compress(ensemble[i].bits()).bit_length;
        const SpaceTimeDiagram diagram = evolve(rule, ensemble[i], steps);
        profile.output_c[i] = output_compressed_bits(diagram, mode);
    }
    profile.variability = variability(profile.output_c);
    profile.controllability = controllability(profile.input_c, profile.output_c);
    profile.programmability = profile.variability * profile.controllability;
    return profile;
}

std::vector<BehaviouralProfile> classify(
    std::span<const std::uint64_t> rule_codes, const EnsembleSpec& spec,
    std::uint32_t steps, SerializeMode mode) {
    if (rule_codes.empty()) throw ValidationError("empty rule list");
    std::vector<BehaviouralProfile> profiles(rule_codes.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < rule_codes.size(); ++i) {
        const RuleTable rule = rule_from_code(rule_codes[i], 1);
        profiles[i] = interrogate(rule, spec, steps, mode);
    }

    std::sort(profiles.begin(), profiles.end(),
              [](const BehaviouralProfile& a, const BehaviouralProfile& b) {
                  if (a.programmability != b.programmability)
                      return a.programmability > b.programmability;
                  return a.rule_code < b.rule_code;
              });
    return profiles;
}

} // namespace proglab
