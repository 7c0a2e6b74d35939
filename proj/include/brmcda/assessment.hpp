#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "brmcda/comparison.hpp"
#include "brmcda/criteria.hpp"
#include "brmcda/mapping.hpp"
#include "brmcda/models.hpp"
#include "brmcda/posterior.hpp"

namespace brmcda {

struct Arm {
    std::string name;
    std::vector<BinomialOutcome> outcomes;  // one per criterion
};

// Trial data plus the decision-maker's linear weights. Weights for the other
// models are always derived from these by mapping.
struct Dataset {
    std::vector<CriterionSpec> criteria;
    std::vector<double> linear_weights;
    std::vector<Arm> arms;

    void validate() const;
};

inline constexpr double kDefaultInteractionMass = 0.2;
inline constexpr double kDefaultPsi = 0.8;
inline constexpr std::size_t kDefaultCaseStudySamples = 100000;
inline constexpr std::uint64_t kDefaultSeed = 20240101;

struct AssessConfig {
    Model model = Model::linear;
    double interaction_mass = kDefaultInteractionMass;
    double psi = kDefaultPsi;
    std::size_t samples = kDefaultCaseStudySamples;
    std::uint64_t seed = kDefaultSeed;
};

// Mean and equal-tailed 95% credible interval.
struct Summary {
    double mean = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

Summary summarize(std::vector<double> draws);

// Linear interpolation between order statistics of sorted data.
double quantile_sorted(const std::vector<double>& sorted, double p);

struct CriterionSummary {
    Summary performance;    // xi
    Summary partial_value;  // u(xi), from clamped draws
};

struct PairwiseResult {
    std::size_t first = 0;
    std::size_t second = 0;
    ComparisonResult result;
};

struct AssessResult {
    AssessConfig config;
    MappingResult weights;
    // [arm][criterion]
    std::vector<std::vector<CriterionSummary>> summaries;
    // Every ordered pair (i, h) with i < h, in lexicographic order.
    std::vector<PairwiseResult> comparisons;
};

// Posterior draws of every arm. Arm a, criterion j uses the stream
// stream_seed(seed, {a, j}), so draws do not depend on the model.
struct ArmDraws {
    std::vector<std::vector<double>> performance;  // [criterion][draw]
    PvfSamples partial_values;
};

std::vector<ArmDraws> draw_arms(const Dataset& dataset, std::size_t samples, std::uint64_t seed);

std::vector<std::vector<CriterionSummary>> summarize_posteriors(const Dataset& dataset,
                                                                 const std::vector<ArmDraws>& draws);

// Compares every pair of arms under one model on already-drawn samples.
std::vector<PairwiseResult> compare_arms(const std::vector<ArmDraws>& draws,
                                         const WeightSet& weights, double psi);

void validate_config(const AssessConfig& config);

AssessResult assess(const Dataset& dataset, const AssessConfig& config);

}  // namespace brmcda
