#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace brmcda {

enum class Model { linear, product, multilinear, slos };

inline constexpr std::array<Model, 4> kAllModels = {
    Model::linear, Model::product, Model::multilinear, Model::slos};

std::string_view to_string(Model model);
Model parse_model(std::string_view text);

enum class Flavor { utility, loss };

// Utility models (linear, product, multilinear) score higher-is-better;
// SLoS scores a loss.
constexpr Flavor native_flavor(Model model) {
    return model == Model::slos ? Flavor::loss : Flavor::utility;
}

// Per-model criterion weights. For the multilinear model `interaction_mass`
// is the total weight c shared by all interaction terms.
//
// Validation is model-aware: every weight must be finite, weights of the
// linear/product/SLoS models must be strictly positive, multilinear weights
// non-negative with 0 <= c <= 1. The sum-to-one constraint applies only to
// linear weights, because mapped product/SLoS/multilinear sets are used as
// produced by the mapping without renormalisation. Linear weights are
// elicited and usually reported to two decimals, so their sum may be off by
// up to 0.005 per weight (e.g. 0.58 + 0.11 + 0.15 + 0.15 = 0.99).
struct WeightSet {
    Model model = Model::linear;
    std::vector<double> weights;
    double interaction_mass = 0.0;

    std::size_t size() const { return weights.size(); }
    void validate() const;
};

inline constexpr double kWeightSumTolerance = 1e-9;
inline constexpr double kRoundingPerWeight = 0.005;

double linear_sum_tolerance(std::size_t n);

struct Score {
    double value = 0.0;
    Flavor flavor = Flavor::utility;
    Model model = Model::linear;
    // Losses made by to_loss keep the utility they came from, so that their
    // difference can be taken as u_h - u_i without rounding 1 - u first.
    double source_utility = 0.0;
};

double linear_utility(std::span<const double> u, std::span<const double> w);
double product_utility(std::span<const double> u, std::span<const double> w);
double multilinear_utility(std::span<const double> u, std::span<const double> w,
                           double interaction_mass);
double slos_loss(std::span<const double> u, std::span<const double> w);

// Native score of `u` under `weights.model`. Does not validate weights; call
// WeightSet::validate() once up front.
double raw_score(std::span<const double> u, const WeightSet& weights);
Score score(std::span<const double> u, const WeightSet& weights);

Score to_loss(const Score& s);

// s_i - s_h, with (+inf) - (+inf) defined as 0.
double score_difference(const Score& s_i, const Score& s_h);

// True when a score difference favours treatment i.
constexpr bool favours_first(double difference, Flavor flavor) {
    return flavor == Flavor::utility ? difference > 0.0 : difference < 0.0;
}

// Number of interaction terms of order >= 2 among n criteria: 2^n - n - 1.
double interaction_term_count(std::size_t n);

}  // namespace brmcda
