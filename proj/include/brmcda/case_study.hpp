#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "brmcda/assessment.hpp"

namespace brmcda::case_study {

// Venlafaxine / Fluoxetine / placebo depression trial: one response
// criterion and three adverse events (nausea, insomnia, anxiety).
Dataset dataset();

struct WeightScenario {
    int id = 1;
    std::array<double, 4> linear_weights{};
};

// 1: equal weights, 2: benefit first, 3: safety first.
const std::array<WeightScenario, 3>& scenarios();
const WeightScenario& scenario(int id);

Dataset with_scenario(Dataset data, const WeightScenario& scenario);

// Pairwise results in the order Venlafaxine-Fluoxetine, Venlafaxine-Placebo,
// Fluoxetine-Placebo.
AssessResult run(const WeightScenario& scenario, Model model,
                 std::size_t samples = kDefaultCaseStudySamples, double psi = kDefaultPsi,
                 std::uint64_t seed = kDefaultSeed,
                 double interaction_mass = kDefaultInteractionMass);

struct ProbabilityCell {
    int scenario = 1;
    Model model = Model::linear;
    std::size_t first = 0;
    std::size_t second = 0;
    double probability = 0.0;
    Decision decision = Decision::neither;
};

// Every scenario x model x pair (36 cells) on one shared set of posterior
// draws.
std::vector<ProbabilityCell> probability_table(std::size_t samples, double psi,
                                               std::uint64_t seed, double interaction_mass);

}  // namespace brmcda::case_study
