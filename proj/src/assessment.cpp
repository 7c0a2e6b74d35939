#include "brmcda/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "brmcda/rng.hpp"

namespace brmcda {

void Dataset::validate() const {
    if (criteria.empty()) throw std::invalid_argument("criteria: at least one criterion required");
    if (linear_weights.size() != criteria.size())
        throw std::invalid_argument("criteria: one linear weight per criterion required");
    for (const auto& c : criteria) c.validate();
    WeightSet{Model::linear, linear_weights, 0.0}.validate();
    if (arms.size() < 2) throw std::invalid_argument("arms: at least two arms required");
    for (const auto& arm : arms) {
        if (arm.outcomes.size() != criteria.size())
            throw std::invalid_argument("arm '" + arm.name + "': expected " +
                                        std::to_string(criteria.size()) + " outcomes, got " +
                                        std::to_string(arm.outcomes.size()));
        for (const auto& o : arm.outcomes) o.validate();
    }
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Summary summarize(std::vector<double> draws) {
    if (draws.empty()) throw std::invalid_argument("summarize: no draws");
    Summary s;
    s.mean = std::accumulate(draws.begin(), draws.end(), 0.0) / static_cast<double>(draws.size());
    std::sort(draws.begin(), draws.end());
    s.lower = quantile_sorted(draws, 0.025);
    s.upper = quantile_sorted(draws, 0.975);
    return s;
}

std::vector<ArmDraws> draw_arms(const Dataset& dataset, std::size_t samples, std::uint64_t seed) {
    const std::size_t n = dataset.criteria.size();
    std::vector<ArmDraws> out(dataset.arms.size());
    for (std::size_t a = 0; a < dataset.arms.size(); ++a) {
        auto& arm = out[a];
        arm.performance.resize(n);
        arm.partial_values = PvfSamples(n, samples);
        for (std::size_t j = 0; j < n; ++j) {
            Rng rng(seed, {a, j});
            const auto posterior = posterior_from_counts(dataset.arms[a].outcomes[j]);
            draw_samples(posterior, rng, arm.performance[j], samples);
            for (std::size_t k = 0; k < samples; ++k)
                arm.partial_values.at(k, j) =
                    partial_value(dataset.criteria[j], arm.performance[j][k]);
        }
    }
    return out;
}

std::vector<std::vector<CriterionSummary>> summarize_posteriors(const Dataset& dataset,
                                                                 const std::vector<ArmDraws>& draws) {
    const std::size_t n = dataset.criteria.size();
    std::vector<std::vector<CriterionSummary>> out(draws.size());
    for (std::size_t a = 0; a < draws.size(); ++a) {
        out[a].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& perf = draws[a].performance[j];
            std::vector<double> pvf(perf.size());
            for (std::size_t k = 0; k < perf.size(); ++k)
                pvf[k] = draws[a].partial_values.at(k, j);
            out[a][j].performance = summarize(perf);
            out[a][j].partial_value = summarize(std::move(pvf));
        }
    }
    return out;
}

std::vector<PairwiseResult> compare_arms(const std::vector<ArmDraws>& draws,
                                         const WeightSet& weights, double psi) {
    std::vector<std::vector<double>> scores;
    scores.reserve(draws.size());
    for (const auto& arm : draws) scores.push_back(score_draws(arm.partial_values, weights));
    std::vector<PairwiseResult> out;
    for (std::size_t i = 0; i < draws.size(); ++i)
        for (std::size_t h = i + 1; h < draws.size(); ++h)
            out.push_back({i, h, compare_scores(scores[i], scores[h],
                                                native_flavor(weights.model), psi)});
    return out;
}

void validate_config(const AssessConfig& config) {
    validate_threshold(config.psi);
    if (!(config.interaction_mass >= 0.0 && config.interaction_mass <= 1.0))
        throw std::invalid_argument("interaction_mass must lie in [0, 1]");
    if (config.samples == 0) throw std::invalid_argument("samples must be positive");
}

AssessResult assess(const Dataset& dataset, const AssessConfig& config) {
    dataset.validate();
    validate_config(config);
    AssessResult result;
    result.config = config;
    result.weights =
        map_weight_vector({dataset.linear_weights, config.interaction_mass, config.model});
    result.weights.weights.validate();
    const auto draws = draw_arms(dataset, config.samples, config.seed);
    result.summaries = summarize_posteriors(dataset, draws);
    result.comparisons = compare_arms(draws, result.weights.weights, config.psi);
    return result;
}

}  // namespace brmcda
