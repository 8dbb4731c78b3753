#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "proglab/eca.hpp"
#include "proglab/error.hpp"
#include "proglab/inference.hpp"
#include "proglab/io.hpp"
#include "proglab/lz78.hpp"
#include "proglab/perturb.hpp"
#include "proglab/prng.hpp"
#include "proglab/programmability.hpp"

namespace {

using json = nlohmann::json;
using namespace proglab;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitContradiction = 4;

std::vector<double> parse_densities(const std::string& s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ValidationError("bad density '" + item + "'");
        }
    }
    if (out.empty()) throw ValidationError("empty density list");
    return out;
}

std::vector<std::uint64_t> parse_rule_list(const std::string& s) {
    if (s == "all") {
        std::vector<std::uint64_t> all(256);
        for (std::uint64_t i = 0; i < 256; ++i) all[i] = i;
        return all;
    }
    std::vector<std::uint64_t> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw ValidationError("bad rule code '" + item + "'");
        }
    }
    if (out.empty()) throw ValidationError("empty rule list");
    return out;
}

Configuration make_init(const std::string& init, std::uint32_t width,
                        double density, std::uint64_t seed) {
    if (init == "single") return single_one(width);
    if (init == "random") {
        Xoshiro256StarStar rng(seed);
        Configuration c(width);
        for (std::uint32_t x = 0; x < width; ++x)
            if (rng.bernoulli(density)) c.set(x, true);
        return c;
    }
    throw ValidationError("unknown init '" + init + "', expected single|random");
}

std::string densities_string(const std::vector<double>& densities) {
    std::string s;
    for (std::size_t i = 0; i < densities.size(); ++i) {
        if (i) s += ",";
        s += format_number(densities[i]);
    }
    return s;
}

json profile_to_json(const BehaviouralProfile& p) {
    return json{{"rule", p.rule_code},
                {"variability", p.variability},
                {"controllability", p.controllability},
                {"programmability", p.programmability},
                {"input_c", p.input_c},
                {"output_c", p.output_c}};
}

// ---- evolve ----------------------------------------------------------------

struct EvolveArgs {
    std::uint64_t rule = 30;
    int radius = 1;
    std::uint32_t width = 257;
    std::uint32_t steps = 128;
    std::string init = "single";
    double density = 0.5;
    std::uint64_t seed = 0x5EED;
    std::string out;
    std::string bits_out;
};

void run_evolve(const EvolveArgs& a) {
    const RuleTable rule = rule_from_code(a.rule, a.radius);
    const Configuration init = make_init(a.init, a.width, a.density, a.seed);
    const SpaceTimeDiagram diagram = evolve(rule, init, a.steps);

    std::ostringstream cfg;
    cfg << "evolve rule=" << a.rule << " radius=" << a.radius
        << " width=" << a.width << " steps=" << a.steps << " init=" << a.init
        << " density=" << format_number(a.density) << " seed=" << a.seed;
    const Metadata meta{cfg.str()};
    write_pbm(a.out, diagram.rows, meta);
    if (!a.bits_out.empty()) write_bit_text(a.bits_out, diagram.rows, meta);
}

// ---- perturb-scan ----------------------------------------------------------

struct PerturbArgs {
    std::uint64_t rule = 22;
    int radius = 1;
    std::uint32_t width = 201;
    std::uint32_t steps = 50;
    std::string init = "random";
    double density = 0.5;
    std::uint64_t seed = 0x5EED;
    std::string out;
    std::vector<std::uint32_t> dump_sites;
};

void run_perturb_scan(const PerturbArgs& a) {
    const RuleTable rule = rule_from_code(a.rule, a.radius);
    const Configuration base = make_init(a.init, a.width, a.density, a.seed);
    const auto profiles = perturbation_scan(rule, base, a.steps);

    std::ostringstream cfg;
    cfg << "perturb-scan rule=" << a.rule << " radius=" << a.radius
        << " width=" << a.width << " steps=" << a.steps << " init=" << a.init
        << " density=" << format_number(a.density) << " seed=" << a.seed;
    const Metadata meta{cfg.str()};

    std::string csv = "# proglab ";
    csv += kToolVersion;
    csv += "\n# ";
    csv += meta.config;
    csv += "\nsite,outcome,final_hamming,speed,wrapped\n";
    for (std::size_t site = 0; site < profiles.size(); ++site) {
        const DamageProfile& p = profiles[site];
        csv += std::to_string(site);
        csv += ",";
        csv += to_string(p.outcome);
        csv += ",";
        csv += std::to_string(p.hamming.back());
        csv += ",";
        csv += format_number(p.speed);
        csv += ",";
        csv += p.wrapped ? "1" : "0";
        csv += "\n";
    }
    write_text_file(a.out, csv);

    for (std::uint32_t site : a.dump_sites) {
        if (site >= a.width)
            throw ValidationError("dump site out of range: " +
                                  std::to_string(site));
        const SpaceTimeDiagram ref = evolve(rule, base, a.steps);
        const SpaceTimeDiagram alt =
            evolve(rule, flip(base, {{site}}), a.steps);
        const DifferenceDiagram diff = difference_diagram(ref, alt);
        std::filesystem::path p(a.out);
        p.replace_filename(p.stem().string() + "_site" +
                           std::to_string(site) + ".pbm");
        Metadata site_meta{meta.config + " site=" + std::to_string(site)};
        write_pbm(p, diff.rows, site_meta);
    }
}

// ---- profile / classify ----------------------------------------------------

struct ClassifyArgs {
    std::string rules = "all";
    std::uint32_t width = 256;
    std::uint32_t steps = 256;
    std::string densities = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    std::uint32_t samples = 8;
    std::uint64_t seed = 0x5EED;
    std::string serialize = "diagram";
    std::string out;
    std::string json_out;
};

EnsembleSpec make_spec(const ClassifyArgs& a) {
    EnsembleSpec spec;
    spec.width = a.width;
    spec.densities = parse_densities(a.densities);
    spec.samples_per_density = a.samples;
    spec.seed = a.seed;
    return spec;
}

std::string classify_config(const char* cmd, const ClassifyArgs& a) {
    std::ostringstream cfg;
    cfg << cmd << " rules=" << a.rules << " width=" << a.width
        << " steps=" << a.steps << " densities=" << a.densities
        << " samples=" << a.samples << " seed=" << a.seed
        << " serialize=" << a.serialize;
    return cfg.str();
}

void run_profile(const ClassifyArgs& a) {
    const auto codes = parse_rule_list(a.rules);
    if (codes.size() != 1)
        throw ValidationError("profile takes exactly one rule code");
    const RuleTable rule = rule_from_code(codes[0], 1);
    const BehaviouralProfile profile =
        interrogate(rule, make_spec(a), a.steps,
                    serialize_mode_from_string(a.serialize));

    json doc = profile_to_json(profile);
    doc["tool_version"] = kToolVersion;
    doc["config"] = classify_config("profile", a);
    const std::string text = doc.dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        write_text_file(a.out, text);
}

void run_classify(const ClassifyArgs& a) {
    const auto codes = parse_rule_list(a.rules);
    const auto profiles =
        classify(codes, make_spec(a), a.steps,
                 serialize_mode_from_string(a.serialize));
    const std::string cfg = classify_config("classify", a);

    std::string csv = "# proglab ";
    csv += kToolVersion;
    csv += "\n# ";
    csv += cfg;
    csv += "\nrule,variability,controllability,programmability\n";
    for (const auto& p : profiles) {
        csv += std::to_string(p.rule_code);
        csv += ",";
        csv += format_number(p.variability);
        csv += ",";
        csv += format_number(p.controllability);
        csv += ",";
        csv += format_number(p.programmability);
        csv += "\n";
    }
    write_text_file(a.out, csv);

    if (!a.json_out.empty()) {
        json doc;
        doc["tool_version"] = kToolVersion;
        doc["config"] = cfg;
        doc["profiles"] = json::array();
        for (const auto& p : profiles)
            doc["profiles"].push_back(profile_to_json(p));
        write_text_file(a.json_out, doc.dump(2) + "\n");
    }
}

// ---- infer -----------------------------------------------------------------

struct InferArgs {
    std::string window_path;
    std::string json_out;
};

int run_infer(const InferArgs& a) {
    const WindowFile wf = read_window_file(a.window_path);
    const ConstraintTable table = collect_constraints(wf.window, 1);
    const IdentifyResult verdict = identify(wf.window);
    const std::uint64_t r2_count = overfit_count(wf.window);

    json doc;
    doc["tool_version"] = kToolVersion;
    doc["config"] = "infer window=" + a.window_path;
    doc["width"] = wf.window.width();
    doc["observations"] = wf.window.cells().size();
    doc["contradiction"] = table.contradiction;
    doc["free_count"] = table.free_count();
    doc["consistent_count_r1"] = consistent_count(table);
    doc["consistent_count_r2"] = r2_count;

    json constraints = json::object();
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        if (table.entries[i] < 0) continue;
        std::string key(3, '0');
        for (int b = 0; b < 3; ++b)
            if ((i >> (2 - b)) & 1) key[b] = '1';
        constraints[key] = static_cast<int>(table.entries[i]);
    }
    doc["constraints"] = constraints;

    std::string verdict_text;
    switch (verdict.kind) {
        case IdentifyResult::Kind::Unique:
            verdict_text = "unique: " + std::to_string(verdict.code);
            break;
        case IdentifyResult::Kind::Ambiguous:
            verdict_text =
                "ambiguous: " + std::to_string(verdict.candidates) +
                " candidates";
            break;
        case IdentifyResult::Kind::Contradiction:
            verdict_text = "contradiction";
            break;
    }
    doc["verdict"] = verdict_text;

    if (verdict.kind != IdentifyResult::Kind::Contradiction) {
        json cands = json::array();
        for (const auto& r : enumerate_consistent(table))
            cands.push_back(r.code);
        doc["candidates_r1"] = cands;
    }

    std::cout << "window: " << a.window_path << "\n"
              << "observations: " << wf.window.cells().size() << "\n"
              << "constrained entries (r=1): " << table.constrained_count()
              << "\n"
              << "consistent rules (r=1): " << consistent_count(table) << "\n"
              << "consistent rules (r=2): " << r2_count << "\n"
              << "verdict: " << verdict_text << "\n";

    if (!a.json_out.empty()) write_text_file(a.json_out, doc.dump(2) + "\n");
    return verdict.kind == IdentifyResult::Kind::Contradiction
               ? kExitContradiction
               : kExitOk;
}

void add_seed_option(CLI::App* cmd, std::uint64_t& seed) {
    cmd->add_option("--seed", seed, "PRNG seed")
        ->envname("PROGLAB_SEED")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioural laboratory for elementary cellular automata"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("proglab ") + kToolVersion);

    EvolveArgs ev;
    auto* evolve_cmd = app.add_subcommand("evolve", "run a rule, write a PBM");
    evolve_cmd->add_option("--rule", ev.rule, "Wolfram code")->required();
    evolve_cmd->add_option("--radius", ev.radius)->capture_default_str();
    evolve_cmd->add_option("--width", ev.width)->capture_default_str();
    evolve_cmd->add_option("--steps", ev.steps)->capture_default_str();
    evolve_cmd->add_option("--init", ev.init, "single|random")
        ->capture_default_str();
    evolve_cmd->add_option("--density", ev.density)->capture_default_str();
    add_seed_option(evolve_cmd, ev.seed);
    evolve_cmd->add_option("--out", ev.out, "output PBM path")->required();
    evolve_cmd->add_option("--bits", ev.bits_out, "optional 0/1 text dump");

    PerturbArgs pt;
    auto* perturb_cmd =
        app.add_subcommand("perturb-scan", "single-cell damage scan, CSV out");
    perturb_cmd->add_option("--rule", pt.rule, "Wolfram code")->required();
    perturb_cmd->add_option("--radius", pt.radius)->capture_default_str();
    perturb_cmd->add_option("--width", pt.width)->capture_default_str();
    perturb_cmd->add_option("--steps", pt.steps)->capture_default_str();
    perturb_cmd->add_option("--init", pt.init, "single|random")
        ->capture_default_str();
    perturb_cmd->add_option("--density", pt.density)->capture_default_str();
    add_seed_option(perturb_cmd, pt.seed);
    perturb_cmd->add_option("--out", pt.out, "output CSV path")->required();
    perturb_cmd->add_option("--dump-site", pt.dump_sites,
                            "write the difference diagram for this site");

    ClassifyArgs pr;
    auto* profile_cmd =
        app.add_subcommand("profile", "behavioural profile of one rule");
    profile_cmd->add_option("--rule", pr.rules, "Wolfram code")->required();
    profile_cmd->add_option("--width", pr.width)->capture_default_str();
    profile_cmd->add_option("--steps", pr.steps)->capture_default_str();
    profile_cmd->add_option("--densities", pr.densities)
        ->capture_default_str();
    profile_cmd->add_option("--samples", pr.samples)->capture_default_str();
    add_seed_option(profile_cmd, pr.seed);
    profile_cmd->add_option("--serialize", pr.serialize,
                            "diagram|rows|center-column")
        ->capture_default_str();
    profile_cmd->add_option("--out", pr.out, "output JSON path (stdout if unset)");

    ClassifyArgs cl;
    auto* classify_cmd =
        app.add_subcommand("classify", "rank rules by programmability");
    classify_cmd->add_option("--rule", cl.rules, "'all' or comma-separated codes")
        ->capture_default_str();
    classify_cmd->add_option("--width", cl.width)->capture_default_str();
    classify_cmd->add_option("--steps", cl.steps)->capture_default_str();
    classify_cmd->add_option("--densities", cl.densities)
        ->capture_default_str();
    classify_cmd->add_option("--samples", cl.samples)->capture_default_str();
    add_seed_option(classify_cmd, cl.seed);
    classify_cmd->add_option("--serialize", cl.serialize,
                             "diagram|rows|center-column")
        ->capture_default_str();
    classify_cmd->add_option("--out", cl.out, "output CSV path")->required();
    classify_cmd->add_option("--json", cl.json_out,
                             "optional JSON audit output");

    InferArgs in;
    auto* infer_cmd =
        app.add_subcommand("infer", "reverse-engineer a rule from a window");
    infer_cmd->add_option("window", in.window_path, "observation window file")
        ->required();
    infer_cmd->add_option("--json", in.json_out, "optional JSON report path");

    try {
        app.parse(argc, argv);
        if (*evolve_cmd) run_evolve(ev);
        if (*perturb_cmd) run_perturb_scan(pt);
        if (*profile_cmd) run_profile(pr);
        if (*classify_cmd) run_classify(cl);
        if (*infer_cmd) return run_infer(in);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
