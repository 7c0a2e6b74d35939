#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "brmcda/models.hpp"

namespace brmcda {

// Posterior partial-value draws for one arm, stored draw-major: draw k is the
// contiguous vector (u_1, ..., u_n). Draw k of every arm is one joint sample.
class PvfSamples {
public:
    PvfSamples() = default;
    PvfSamples(std::size_t criteria, std::size_t draws)
        : criteria_(criteria), draws_(draws), data_(criteria * draws) {}

    std::size_t criteria() const { return criteria_; }
    std::size_t draws() const { return draws_; }

    std::span<const double> draw(std::size_t k) const {
        return {data_.data() + k * criteria_, criteria_};
    }
    double& at(std::size_t k, std::size_t j) { return data_[k * criteria_ + j]; }
    double at(std::size_t k, std::size_t j) const { return data_[k * criteria_ + j]; }

    // Writes one criterion's draws into column j.
    void set_criterion(std::size_t j, std::span<const double> values);

private:
    std::size_t criteria_ = 0;
    std::size_t draws_ = 0;
    std::vector<double> data_;
};

enum class Decision { recommend_first, recommend_second, neither };

std::string_view to_string(Decision decision);

struct ComparisonResult {
    double probability = 0.0;
    std::size_t n_samples = 0;
    std::size_t wins_first = 0;
    std::size_t wins_second = 0;
    std::size_t ties = 0;
    Decision decision = Decision::neither;
    double threshold = 0.8;
};

// recommend_first iff p > psi, recommend_second iff p < 1 - psi.
Decision decide(double probability, double psi);
void validate_threshold(double psi);

// Native per-draw scores of an arm under one model.
std::vector<double> score_draws(const PvfSamples& samples, const WeightSet& weights);

// Counts strict wins draw by draw; equal scores (including inf vs inf) are
// ties and favour neither side.
ComparisonResult compare_scores(std::span<const double> scores_i,
                                std::span<const double> scores_h, Flavor flavor, double psi);

// Estimate of P(arm i scores better than arm h) over paired posterior draws.
ComparisonResult comparison_probability(const PvfSamples& samples_i, const PvfSamples& samples_h,
                                        const WeightSet& weights, double psi);

}  // namespace brmcda
