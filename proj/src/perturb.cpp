#include "proglab/perturb.hpp"

#include <set>
#include <string>

#include "proglab/error.hpp"

namespace proglab {

Configuration flip(const Configuration& config, const PerturbationSpec& spec) {
    std::set<std::uint32_t> seen;
    Configuration out = config;
    for (auto x : spec.flip_indices) {
        if (x >= config.width())
            throw ValidationError("flip index " + std::to_string(x) +
                                  " out of range for width " +
                                  std::to_string(config.width()));
        if (!seen.insert(x).second)
            throw ValidationError("duplicate flip index " + std::to_string(x));
        out.set(x, !out.get(x));
    }
    return out;
}

DifferenceDiagram difference_diagram(const SpaceTimeDiagram& a,
                                     const SpaceTimeDiagram& b) {
    if (a.rows.size() != b.rows.size() || a.width() != b.width())
        throw ValidationError("difference of diagrams with different shapes");
    DifferenceDiagram diff;
    diff.rows.reserve(a.rows.size());
    for (std::size_t t = 0; t < a.rows.size(); ++t)
        diff.rows.push_back(a.rows[t] ^ b.rows[t]);
    return diff;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Extinct: return "extinct";
        case Outcome::Bounded: return "bounded";
        case Outcome::Spreading: return "spreading";
    }
    return "?";
}

DamageProfile damage_profile(const DifferenceDiagram& diff,
                             std::uint32_t flip_origin, int radius) {
    if (diff.rows.size() < 2)
        throw ValidationError("damage profile needs at least 2 rows");
    const std::int64_t w = diff.width();
    if (flip_origin >= w)
        throw ValidationError("flip origin out of range");
    if (diff.rows[0].popcount() == 0)
        throw ValidationError("row 0 of the difference diagram is empty");

    const std::uint32_t T = diff.steps();
    DamageProfile profile;
    profile.hamming.resize(T + 1);
    profile.left_front.resize(T + 1, 0);
    profile.right_front.resize(T + 1, 0);

    for (std::uint32_t t = 0; t <= T; ++t) {
        const BitRow& row = diff.rows[t];
        std::uint32_t count = 0;
        std::int64_t lo = 0, hi = 0;
        for (std::uint32_t x = 0; x < w; ++x) {
            if (!row.get(x)) continue;
            // fold into (-w/2, w/2]
            std::int64_t off = (static_cast<std::int64_t>(x) - flip_origin + w) % w;
            if (off > w / 2) off -= w;
            if (count == 0) {
                lo = hi = off;
            } else {
                if (off < lo) lo = off;
                if (off > hi) hi = off;
            }
            ++count;
        }
        profile.hamming[t] = count;
        if (count > 0) {
            profile.left_front[t] = static_cast<std::int32_t>(lo);
            profile.right_front[t] = static_cast<std::int32_t>(hi);
            // Fronts are ambiguous once damage reaches the cyclic fold
            // boundary opposite the origin.
            if (hi >= w / 2 || lo <= -((w - 1) / 2) || hi - lo + 1 >= w)
                profile.wrapped = true;
        }
    }

    if (profile.hamming[T] == 0) {
        profile.outcome = Outcome::Extinct;
        profile.speed = 0.0;
        return profile;
    }

    profile.speed =
        static_cast<double>(profile.right_front[T] - profile.right_front[0]) /
        static_cast<double>(T);

    // Spreading: over the final ceil(T/2) rows the damage extent never
    // shrinks and ends strictly wider than it began.
    const std::uint32_t t0 = T - (T + 1) / 2;
    bool nondecreasing = true;
    for (std::uint32_t t = t0; t < T; ++t) {
        if (profile.hamming[t] == 0 || profile.hamming[t + 1] == 0) {
            nondecreasing = false;
            break;
        }
        const std::int64_t e0 = profile.right_front[t] - profile.left_front[t];
        const std::int64_t e1 =
            profile.right_front[t + 1] - profile.left_front[t + 1];
        if (e1 < e0) {
            nondecreasing = false;
            break;
        }
    }
    const std::int64_t extent_first =
        profile.right_front[t0] - profile.left_front[t0];
    const std::int64_t extent_last =
        profile.right_front[T] - profile.left_front[T];
    profile.outcome = (nondecreasing && extent_last > extent_first)
                          ? Outcome::Spreading
                          : Outcome::Bounded;
    return profile;
}

std::vector<DamageProfile> perturbation_scan(const RuleTable& rule,
                                             const Configuration& base,
                                             std::uint32_t steps) {
    if (steps < 1)
        throw ValidationError("perturbation scan needs steps >= 1");
    const SpaceTimeDiagram reference = evolve(rule, base, steps);
    std::vector<DamageProfile> profiles(base.width());

#pragma omp parallel for schedule(dynamic)
    for (std::uint32_t site = 0; site < base.width(); ++site) {
        const Configuration perturbed = flip(base, {{site}});
        const SpaceTimeDiagram other = evolve(rule, perturbed, steps);
        profiles[site] =
            damage_profile(difference_diagram(reference, other), site,
                           rule.radius);
    }
    return profiles;
}

} // namespace proglab
