#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "brmcda/case_study.hpp"
#include "brmcda/simulation.hpp"

namespace brmcda::report {

// Simulation outputs. Column order is fixed; probabilities are printed with
// six decimals.
void write_recommendations(std::ostream& out, const sim::RecommendationGrid& grid);
void write_phi(std::ostream& out, const std::vector<sim::PhiCell>& phi);
// One row per scenario and model plus "all" rows with the totals.
void write_sensitivity(std::ostream& out, const sim::SensitivityResult& result);

struct ScenarioMapping {
    int scenario = 1;
    MappingResult mapping;
};

// Case-study tables.
struct CaseStudyTables {
    Dataset dataset;
    std::vector<std::vector<CriterionSummary>> summaries;  // posterior table
    std::vector<ScenarioMapping> mappings;
    std::vector<case_study::ProbabilityCell> probabilities;
    std::size_t samples = 0;
    double psi = 0.0;
    double interaction_mass = 0.0;
    std::uint64_t seed = 0;
};

// Posterior summaries, mapped weights and pairwise probabilities for the
// given scenarios and models.
CaseStudyTables case_study_tables(const std::vector<int>& scenarios,
                                  const std::vector<Model>& models, std::size_t samples,
                                  double psi, std::uint64_t seed, double interaction_mass);

void write_posteriors(std::ostream& out, const CaseStudyTables& tables);
void write_weights(std::ostream& out, const CaseStudyTables& tables);
void write_probabilities(std::ostream& out, const CaseStudyTables& tables);
void write_text_report(std::ostream& out, const CaseStudyTables& tables);

// Writes posteriors.csv, weights.csv, probabilities.csv and report.txt.
void write_case_study(const std::filesystem::path& dir, const CaseStudyTables& tables);

// Writes recommendations.csv and phi.csv.
void write_grid(const std::filesystem::path& dir, const sim::RecommendationGrid& grid);

}  // namespace brmcda::report
