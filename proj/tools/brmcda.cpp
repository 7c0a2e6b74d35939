// brmcda: case study, simulation study, weight mapping, contours and dataset
// assessment from the command line.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brmcda/case_study.hpp"
#include "brmcda/contours.hpp"
#include "brmcda/io.hpp"
#include "brmcda/report.hpp"
#include "brmcda/simulation.hpp"

using namespace brmcda;

namespace {

// Below this many samples the case-study probabilities are too noisy to
// compare with the published table.
constexpr std::size_t kSmallSampleWarning = 10000;

std::vector<Model> model_selection(const std::string& name) {
    if (name.empty()) return {kAllModels.begin(), kAllModels.end()};
    return {parse_model(name)};
}

std::string format_loss(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct CaseStudyOptions {
    std::vector<int> scenarios;
    std::string model;
    bool all = false;
    bool csv = false;
    std::size_t samples = kDefaultCaseStudySamples;
    std::uint64_t seed = kDefaultSeed;
    double psi = kDefaultPsi;
    double c = kDefaultInteractionMass;
    std::string out;
};

int run_case_study(const CaseStudyOptions& o) {
    if (o.all && (!o.scenarios.empty() || !o.model.empty()))
        throw std::invalid_argument("--all cannot be combined with --scenario or --model");
    std::vector<int> scenarios = o.scenarios;
    if (scenarios.empty()) scenarios = {1, 2, 3};
    for (int id : scenarios) case_study::scenario(id);
    if (o.samples < kSmallSampleWarning) {
        const double se = 50.0 / std::sqrt(static_cast<double>(o.samples));
        std::fprintf(stderr,
                     "warning: %zu samples gives probabilities with standard error up to "
                     "%.1f percentage points; use at least %zu for stable results\n",
                     o.samples, se, kSmallSampleWarning);
    }
    const auto tables = report::case_study_tables(scenarios, model_selection(o.model), o.samples,
                                                  o.psi, o.seed, o.c);
    if (!o.out.empty()) {
        report::write_case_study(o.out, tables);
        std::fprintf(stderr, "wrote posteriors.csv, weights.csv, probabilities.csv, report.txt to %s\n",
                     o.out.c_str());
    } else if (o.all || o.csv) {
        report::write_probabilities(std::cout, tables);
    } else {
        report::write_text_report(std::cout, tables);
    }
    return 0;
}

struct SimulateOptions {
    std::vector<int> scenarios;
    sim::Settings settings;
    std::string out;
};

int run_simulate(SimulateOptions o) {
    if (o.scenarios.empty())
        for (int s = 1; s <= sim::kScenarioCount; ++s) o.scenarios.push_back(s);
    const double rho = o.settings.rho;
    o.settings.validate();

    auto grid = sim::run_grid(o.settings, o.scenarios);
    std::optional<sim::SensitivityResult> sensitivity;
    if (rho != 0.0) {
        sim::Settings base = o.settings;
        base.rho = 0.0;
        sensitivity = sim::compare_grids(sim::run_grid(base, o.scenarios), grid);
    }

    if (!o.out.empty()) {
        report::write_grid(o.out, grid);
        const std::filesystem::path dir(o.out);
        if (sensitivity) {
            std::ofstream f(dir / "correlation_sensitivity.csv");
            if (!f) throw std::runtime_error("cannot write correlation_sensitivity.csv");
            report::write_sensitivity(f, *sensitivity);
        }
        std::fprintf(stderr, "wrote recommendations.csv, phi.csv%s to %s\n",
                     sensitivity ? ", correlation_sensitivity.csv" : "", o.out.c_str());
    } else if (sensitivity) {
        report::write_sensitivity(std::cout, *sensitivity);
    } else {
        report::write_recommendations(std::cout, grid);
    }
    return 0;
}

struct MapOptions {
    std::vector<double> weights;
    double c = kDefaultInteractionMass;
    std::string model;
    bool json = false;
};

int run_map_weights(const MapOptions& o) {
    nlohmann::json out = nlohmann::json::array();
    for (Model model : model_selection(o.model)) {
        const auto mapped = map_weight_vector({o.weights, o.c, model});
        for (std::size_t j : mapped.floored)
            std::fprintf(stderr,
                         "warning: multilinear weight %zu floored at 0 (linear weight %.4g is "
                         "below c/n = %.4g)\n",
                         j + 1, o.weights[j], o.c / static_cast<double>(o.weights.size()));
        if (o.json) {
            out.push_back(to_json(mapped));
            continue;
        }
        std::printf("%-12s", std::string(to_string(model)).c_str());
        for (double w : mapped.weights.weights) std::printf(" %.4f", w);
        if (model == Model::multilinear) std::printf("  c=%.4g", mapped.weights.interaction_mass);
        std::printf("\n");
    }
    if (o.json) std::cout << out.dump(2) << '\n';
    return 0;
}

struct ContourOptions {
    std::string model;
    double w = 0.5;
    double c = kDefaultInteractionMass;
    std::size_t grid = 101;
    bool json = false;
};

int run_contours(const ContourOptions& o) {
    const WeightSet ws = two_criterion_weights(parse_model(o.model), o.w, o.c);
    const LossGrid g = loss_grid(ws, o.grid);
    if (o.json) {
        auto j = to_json(g);
        j["midpoint_slope"] = midpoint_slope(ws);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "benefit,risk,loss\n";
    for (std::size_t b = 0; b < g.size; ++b)
        for (std::size_t r = 0; r < g.size; ++r)
            std::cout << format_loss(g.axis[b]) << ',' << format_loss(g.axis[r]) << ','
                      << format_loss(g.at(b, r)) << '\n';
    return 0;
}

struct AssessOptions {
    std::string path;
    std::string model;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> psi;
    std::optional<double> c;
};

int run_assess(const AssessOptions& o) {
    AssessRequest req = load_assess_request(o.path, o.model.empty());
    if (!o.model.empty()) req.config.model = parse_model(o.model);
    if (o.samples) req.config.samples = *o.samples;
    if (o.seed) req.config.seed = *o.seed;
    if (o.psi) req.config.psi = *o.psi;
    if (o.c) req.config.interaction_mass = *o.c;
    std::cout << to_json(req.dataset, assess(req.dataset, req.config)).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probabilistic benefit-risk assessment with linear, product, multilinear and "
                 "SLoS aggregation"};
    app.require_subcommand(1);

    CaseStudyOptions cs;
    auto* cs_cmd = app.add_subcommand("case-study", "Depression trial case study");
    cs_cmd->add_option("--scenario", cs.scenarios, "Weight scenario 1-3 (repeatable; default all)");
    cs_cmd->add_option("--model", cs.model, "linear, product, multilinear or slos (default all)");
    cs_cmd->add_flag("--all", cs.all, "Every scenario and model as CSV");
    cs_cmd->add_flag("--csv", cs.csv, "Print the probability table as CSV");
    cs_cmd->add_option("--samples", cs.samples, "Posterior samples per criterion")
        ->check(CLI::PositiveNumber);
    cs_cmd->add_option("--seed", cs.seed, "Master seed");
    cs_cmd->add_option("--psi", cs.psi, "Decision threshold")->check(CLI::Range(0.5, 1.0));
    cs_cmd->add_option("--c", cs.c, "Multilinear interaction mass")->check(CLI::Range(0.0, 1.0));
    cs_cmd->add_option("--out", cs.out, "Directory for CSV tables and report");

    SimulateOptions so;
    auto* sim_cmd = app.add_subcommand("simulate", "Two-arm simulation study");
    sim_cmd->add_option("--scenario", so.scenarios, "T1 scenario 1-9 (repeatable; default all)")
        ->check(CLI::Range(1, sim::kScenarioCount));
    sim_cmd->add_option("--trials", so.settings.trials, "Simulated trials per cell")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--posterior-samples", so.settings.posterior_samples,
                        "Posterior samples per trial")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--patients", so.settings.n_patients, "Patients per arm")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--rho", so.settings.rho,
                        "Within-arm benefit/risk correlation; nonzero also compares with rho=0")
        ->check(CLI::Range(-1.0, 1.0));
    sim_cmd->add_option("--psi", so.settings.psi, "Decision threshold")->check(CLI::Range(0.5, 1.0));
    sim_cmd->add_option("--c", so.settings.interaction_mass, "Multilinear interaction mass")
        ->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--seed", so.settings.seed, "Master seed");
    sim_cmd->add_option("--jobs", so.settings.jobs, "Worker threads (0: all cores)");
    sim_cmd->add_option("--out", so.out, "Directory for CSV outputs");

    MapOptions mo;
    auto* map_cmd = app.add_subcommand("map-weights", "Map linear weights to the other models");
    map_cmd->add_option("weights", mo.weights, "Linear weights")->required();
    map_cmd->add_option("--c", mo.c, "Multilinear interaction mass")->check(CLI::Range(0.0, 1.0));
    map_cmd->add_option("--model", mo.model, "Target model (default all)");
    map_cmd->add_flag("--json", mo.json, "JSON output");

    ContourOptions co;
    auto* con_cmd = app.add_subcommand("contours", "Loss over the (benefit, risk) unit square");
    con_cmd->add_option("--model", co.model, "Aggregation model")->required();
    con_cmd->add_option("--w", co.w, "Benefit weight of the model");
    con_cmd->add_option("--c", co.c, "Multilinear interaction mass")->check(CLI::Range(0.0, 1.0));
    con_cmd->add_option("--grid", co.grid, "Points per axis")->check(CLI::Range(2, 100001));
    con_cmd->add_flag("--json", co.json, "JSON output");

    AssessOptions ao;
    auto* as_cmd = app.add_subcommand("assess", "Assess a dataset file (JSON)");
    as_cmd->add_option("dataset", ao.path, "Dataset file")->required();
    as_cmd->add_option("--model", ao.model, "Override the dataset's model");
    as_cmd->add_option("--samples", ao.samples, "Override posterior samples")
        ->check(CLI::PositiveNumber);
    as_cmd->add_option("--seed", ao.seed, "Override seed");
    as_cmd->add_option("--psi", ao.psi, "Override threshold")->check(CLI::Range(0.5, 1.0));
    as_cmd->add_option("--c", ao.c, "Override interaction mass")->check(CLI::Range(0.0, 1.0));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cs_cmd->parsed()) return run_case_study(cs);
        if (sim_cmd->parsed()) return run_simulate(so);
        if (map_cmd->parsed()) return run_map_weights(mo);
        if (con_cmd->parsed()) return run_contours(co);
        if (as_cmd->parsed()) return run_assess(ao);
    } catch (const FieldError& e) {
        std::fprintf(stderr, "error: invalid field %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
