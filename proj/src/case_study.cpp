#include "brmcda/case_study.hpp"

#include <stdexcept>
#include <string>

namespace brmcda::case_study {

Dataset dataset() {
    Dataset d;
    d.criteria = {
        {"response", CriterionKind::benefit, 0.8, 0.2},
        {"nausea", CriterionKind::risk, 0.0, 0.5},
        {"insomnia", CriterionKind::risk, 0.0, 0.5},
        {"anxiety", CriterionKind::risk, 0.0, 0.5},
    };
    d.linear_weights = {0.25, 0.25, 0.25, 0.25};
    d.arms = {
        {"Venlafaxine", {{51, 96}, {40, 100}, {22, 100}, {10, 100}}},
        {"Fluoxetine", {{45, 100}, {22, 102}, {15, 102}, {7, 102}}},
        {"Placebo", {{37, 101}, {8, 102}, {14, 102}, {1, 102}}},
    };
    return d;
}

const std::array<WeightScenario, 3>& scenarios() {
    static const std::array<WeightScenario, 3> kScenarios = {{
        {1, {0.25, 0.25, 0.25, 0.25}},
        {2, {0.58, 0.11, 0.15, 0.15}},
        {3, {0.18, 0.28, 0.25, 0.29}},
    }};
    return kScenarios;
}

const WeightScenario& scenario(int id) {
    if (id < 1 || id > 3)
        throw std::invalid_argument("scenario must be 1, 2 or 3 (got " + std::to_string(id) + ")");
    return scenarios()[static_cast<std::size_t>(id - 1)];
}

Dataset with_scenario(Dataset data, const WeightScenario& scenario) {
    data.linear_weights.assign(scenario.linear_weights.begin(), scenario.linear_weights.end());
    return data;
}

AssessResult run(const WeightScenario& scenario, Model model, std::size_t samples, double psi,
                 std::uint64_t seed, double interaction_mass) {
    AssessConfig config;
    config.model = model;
    config.samples = samples;
    config.psi = psi;
    config.seed = seed;
    config.interaction_mass = interaction_mass;
    return assess(with_scenario(dataset(), scenario), config);
}

std::vector<ProbabilityCell> probability_table(std::size_t samples, double psi,
                                               std::uint64_t seed, double interaction_mass) {
    validate_threshold(psi);
    const Dataset base = dataset();
    const auto draws = draw_arms(base, samples, seed);
    std::vector<ProbabilityCell> cells;
    for (const auto& sc : scenarios()) {
        const Dataset d = with_scenario(base, sc);
        for (Model model : kAllModels) {
            const auto mapped = map_weight_vector({d.linear_weights, interaction_mass, model});
            for (const auto& pair : compare_arms(draws, mapped.weights, psi))
                cells.push_back({sc.id, model, pair.first, pair.second, pair.result.probability,
                                 pair.result.decision});
        }
    }
    return cells;
}

}  // namespace brmcda::case_study
