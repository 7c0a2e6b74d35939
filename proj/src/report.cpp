#include "brmcda/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace brmcda::report {

namespace {

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string percent(double p) { return fixed(100.0 * p, 1) + "%"; }

std::ofstream open(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace

void write_recommendations(std::ostream& out, const sim::RecommendationGrid& grid) {
    out << "scenario_id,theta2_benefit,theta2_risk,model,p_rec_t1,p_rec_t2\n";
    for (const auto& c : grid.cells)
        for (std::size_t m = 0; m < kAllModels.size(); ++m)
            out << c.scenario_id << ',' << fixed(sim::grid_value(c.benefit_index), 1) << ','
                << fixed(sim::grid_value(c.risk_index), 1) << ',' << to_string(kAllModels[m])
                << ',' << fixed(c.p_rec_t1(m)) << ',' << fixed(c.p_rec_t2(m)) << '\n';
}

void write_phi(std::ostream& out, const std::vector<sim::PhiCell>& phi) {
    out << "scenario_id,theta2_benefit,theta2_risk,pair,phi\n";
    for (const auto& c : phi)
        for (std::size_t k = 0; k < sim::kPhiPairs.size(); ++k)
            out << c.scenario_id << ',' << fixed(sim::grid_value(c.benefit_index), 1) << ','
                << fixed(sim::grid_value(c.risk_index), 1) << ','
                << to_string(sim::kPhiPairs[k].x) << '-' << to_string(sim::kPhiPairs[k].y)
                << ',' << fixed(c.phi[k]) << '\n';
}

void write_sensitivity(std::ostream& out, const sim::SensitivityResult& r) {
    const std::string rho = fixed(r.rho, 2);
    out << "scenario_id,model,rho,count_2_5,count_5,total\n";
    for (const auto& row : r.rows)
        for (std::size_t m = 0; m < kAllModels.size(); ++m)
            out << row.scenario_id << ',' << to_string(kAllModels[m]) << ',' << rho << ','
                << row.count_2_5[m] << ',' << row.count_5[m] << ',' << row.total << '\n';
    for (std::size_t m = 0; m < kAllModels.size(); ++m)
        out << "all," << to_string(kAllModels[m]) << ',' << rho << ',' << r.total_2_5[m] << ','
            << r.total_5[m] << ',' << r.total << '\n';
}

CaseStudyTables case_study_tables(const std::vector<int>& scenarios,
                                  const std::vector<Model>& models, std::size_t samples,
                                  double psi, std::uint64_t seed, double interaction_mass) {
    AssessConfig cfg;
    cfg.samples = samples;
    cfg.psi = psi;
    cfg.seed = seed;
    cfg.interaction_mass = interaction_mass;
    validate_config(cfg);

    CaseStudyTables t;
    t.dataset = case_study::dataset();
    t.samples = samples;
    t.psi = psi;
    t.seed = seed;
    t.interaction_mass = interaction_mass;

    const auto draws = draw_arms(t.dataset, samples, seed);
    t.summaries = summarize_posteriors(t.dataset, draws);
    for (int id : scenarios) {
        const Dataset d = case_study::with_scenario(t.dataset, case_study::scenario(id));
        for (Model model : models) {
            auto mapped = map_weight_vector({d.linear_weights, interaction_mass, model});
            for (const auto& pair : compare_arms(draws, mapped.weights, psi))
                t.probabilities.push_back({id, model, pair.first, pair.second,
                                           pair.result.probability, pair.result.decision});
            t.mappings.push_back({id, std::move(mapped)});
        }
    }
    return t;
}

void write_posteriors(std::ostream& out, const CaseStudyTables& t) {
    out << "arm,criterion,xi_mean,xi_lower,xi_upper,u_mean,u_lower,u_upper\n";
    for (std::size_t a = 0; a < t.summaries.size(); ++a)
        for (std::size_t j = 0; j < t.summaries[a].size(); ++j) {
            const auto& s = t.summaries[a][j];
            out << t.dataset.arms[a].name << ',' << t.dataset.criteria[j].name << ','
                << fixed(s.performance.mean) << ',' << fixed(s.performance.lower) << ','
                << fixed(s.performance.upper) << ',' << fixed(s.partial_value.mean) << ','
                << fixed(s.partial_value.lower) << ',' << fixed(s.partial_value.upper) << '\n';
        }
}

void write_weights(std::ostream& out, const CaseStudyTables& t) {
    out << "scenario,model,criterion,linear_weight,weight,interaction_mass,floored\n";
    for (const auto& [id, m] : t.mappings) {
        const auto& linear = case_study::scenario(id).linear_weights;
        for (std::size_t j = 0; j < m.weights.size(); ++j) {
            bool floored = false;
            for (auto f : m.floored) floored = floored || f == j;
            out << id << ',' << to_string(m.weights.model) << ','
                << t.dataset.criteria[j].name << ',' << fixed(linear[j], 4) << ','
                << fixed(m.weights.weights[j]) << ',' << fixed(m.weights.interaction_mass, 4)
                << ',' << (floored ? "true" : "false") << '\n';
        }
    }
}

void write_probabilities(std::ostream& out, const CaseStudyTables& t) {
    out << "scenario,model,first,second,probability,decision\n";
    for (const auto& c : t.probabilities)
        out << c.scenario << ',' << to_string(c.model) << ',' << t.dataset.arms[c.first].name
            << ',' << t.dataset.arms[c.second].name << ',' << fixed(c.probability) << ','
            << to_string(c.decision) << '\n';
}

void write_text_report(std::ostream& out, const CaseStudyTables& t) {
    out << "Benefit-risk case study\n"
        << "samples " << t.samples << ", psi " << fixed(t.psi, 2) << ", c "
        << fixed(t.interaction_mass, 2) << ", seed " << t.seed << "\n\n";

    out << "Posterior summaries: mean (2.5%, 97.5%)\n";
    for (std::size_t a = 0; a < t.summaries.size(); ++a) {
        out << "  " << t.dataset.arms[a].name << '\n';
        for (std::size_t j = 0; j < t.summaries[a].size(); ++j) {
            const auto& s = t.summaries[a][j];
            char line[160];
            std::snprintf(line, sizeof line,
                          "    %-10s xi %.2f (%.2f, %.2f)   u %.2f (%.2f, %.2f)\n",
                          t.dataset.criteria[j].name.c_str(), s.performance.mean,
                          s.performance.lower, s.performance.upper, s.partial_value.mean,
                          s.partial_value.lower, s.partial_value.upper);
            out << line;
        }
    }

    out << "\nMapped weights\n";
    for (const auto& [id, m] : t.mappings) {
        char head[64];
        std::snprintf(head, sizeof head, "  scenario %d %-12s", id,
                      std::string(to_string(m.weights.model)).c_str());
        out << head;
        for (double w : m.weights.weights) out << ' ' << fixed(w, 4);
        if (!m.floored.empty()) out << "  (floored at 0)";
        out << '\n';
    }

    out << "\nProbability the first arm scores better (decision at psi)\n";
    for (const auto& c : t.probabilities) {
        char line[160];
        std::snprintf(line, sizeof line, "  scenario %d %-12s %-11s vs %-11s %7s  %s\n",
                      c.scenario, std::string(to_string(c.model)).c_str(),
                      t.dataset.arms[c.first].name.c_str(),
                      t.dataset.arms[c.second].name.c_str(), percent(c.probability).c_str(),
                      std::string(to_string(c.decision)).c_str());
        out << line;
    }
}

void write_case_study(const std::filesystem::path& dir, const CaseStudyTables& t) {
    std::filesystem::create_directories(dir);
    {
        auto f = open(dir / "posteriors.csv");
        write_posteriors(f, t);
    }
    {
        auto f = open(dir / "weights.csv");
        write_weights(f, t);
    }
    {
        auto f = open(dir / "probabilities.csv");
        write_probabilities(f, t);
    }
    auto f = open(dir / "report.txt");
    write_text_report(f, t);
}

void write_grid(const std::filesystem::path& dir, const sim::RecommendationGrid& grid) {
    std::filesystem::create_directories(dir);
    {
        auto f = open(dir / "recommendations.csv");
        write_recommendations(f, grid);
    }
    auto f = open(dir / "phi.csv");
    write_phi(f, sim::difference_grid(grid));
}

}  // namespace brmcda::report
