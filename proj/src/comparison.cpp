#include "brmcda/comparison.hpp"

#include <stdexcept>
#include <string>

namespace brmcda {

void PvfSamples::set_criterion(std::size_t j, std::span<const double> values) {
    if (j >= criteria_ || values.size() != draws_)
        throw std::invalid_argument("PvfSamples::set_criterion: shape mismatch");
    for (std::size_t k = 0; k < draws_; ++k) data_[k * criteria_ + j] = values[k];
}

std::string_view to_string(Decision decision) {
    switch (decision) {
        case Decision::recommend_first: return "recommend_i";
        case Decision::recommend_second: return "recommend_h";
        case Decision::neither: return "neither";
    }
    return "?";
}

void validate_threshold(double psi) {
    if (!(psi >= 0.5 && psi <= 1.0))
        throw std::invalid_argument("psi must lie in [0.5, 1] (got " + std::to_string(psi) + ")");
}

Decision decide(double probability, double psi) {
    if (probability > psi) return Decision::recommend_first;
    if (probability < 1.0 - psi) return Decision::recommend_second;
    return Decision::neither;
}

std::vector<double> score_draws(const PvfSamples& samples, const WeightSet& weights) {
    if (samples.criteria() != weights.size())
        throw std::invalid_argument("score_draws: " + std::to_string(samples.criteria()) +
                                    " criteria but " + std::to_string(weights.size()) +
                                    " weights");
    std::vector<double> out(samples.draws());
    for (std::size_t k = 0; k < samples.draws(); ++k) out[k] = raw_score(samples.draw(k), weights);
    return out;
}

ComparisonResult compare_scores(std::span<const double> scores_i,
                                std::span<const double> scores_h, Flavor flavor, double psi) {
    validate_threshold(psi);
    if (scores_i.size() != scores_h.size())
        throw std::invalid_argument("compare_scores: sample counts differ (" +
                                    std::to_string(scores_i.size()) + " vs " +
                                    std::to_string(scores_h.size()) + ")");
    if (scores_i.empty()) throw std::invalid_argument("compare_scores: no samples");
    ComparisonResult r;
    r.n_samples = scores_i.size();
    r.threshold = psi;
    const bool utility = flavor == Flavor::utility;
    for (std::size_t k = 0; k < scores_i.size(); ++k) {
        const double si = scores_i[k];
        const double sh = scores_h[k];
        if (utility ? si > sh : si < sh)
            ++r.wins_first;
        else if (utility ? si < sh : si > sh)
            ++r.wins_second;
        else
            ++r.ties;
    }
    r.probability = static_cast<double>(r.wins_first) / static_cast<double>(r.n_samples);
    r.decision = decide(r.probability, psi);
    return r;
}

ComparisonResult comparison_probability(const PvfSamples& samples_i, const PvfSamples& samples_h,
                                        const WeightSet& weights, double psi) {
    weights.validate();
    if (samples_i.draws() != samples_h.draws())
        throw std::invalid_argument("comparison_probability: sample counts differ");
    const auto si = score_draws(samples_i, weights);
    const auto sh = score_draws(samples_h, weights);
    return compare_scores(si, sh, native_flavor(weights.model), psi);
}

}  // namespace brmcda
