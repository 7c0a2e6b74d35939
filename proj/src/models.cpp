#include "brmcda/models.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace brmcda {

namespace {

void check_dims(std::span<const double> u, std::span<const double> w, const char* who) {
    if (u.size() != w.size())
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(u.size()) +
                                    " partial values but " + std::to_string(w.size()) +
                                    " weights");
}

}  // namespace

std::string_view to_string(Model model) {
    switch (model) {
        case Model::linear: return "linear";
        case Model::product: return "product";
        case Model::multilinear: return "multilinear";
        case Model::slos: return "slos";
    }
    return "?";
}

Model parse_model(std::string_view text) {
    if (text == "linear") return Model::linear;
    if (text == "product") return Model::product;
    if (text == "multilinear" || text == "multi-linear" || text == "ml") return Model::multilinear;
    if (text == "slos" || text == "SLoS") return Model::slos;
    throw std::invalid_argument("unknown model '" + std::string(text) +
                                "' (expected linear, product, multilinear or slos)");
}

double linear_sum_tolerance(std::size_t n) {
    return kWeightSumTolerance + kRoundingPerWeight * static_cast<double>(n);
}

void WeightSet::validate() const {
    if (weights.empty()) throw std::invalid_argument("weights: empty weight vector");
    double sum = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double w = weights[j];
        if (!std::isfinite(w))
            throw std::invalid_argument("weights[" + std::to_string(j) + "] is not finite");
        if (model == Model::multilinear ? w < 0.0 : w <= 0.0)
            throw std::invalid_argument("weights[" + std::to_string(j) + "] = " +
                                        std::to_string(w) + " is not allowed for the " +
                                        std::string(to_string(model)) + " model");
        sum += w;
    }
    if (model == Model::multilinear) {
        if (weights.size() < 2)
            throw std::invalid_argument("multilinear model needs at least 2 criteria");
        if (!(interaction_mass >= 0.0 && interaction_mass <= 1.0))
            throw std::invalid_argument("interaction_mass must lie in [0, 1]");
        // Mapped weights sum to 1 - c before flooring. Flooring lifts each of at
        // most n - 1 weights by less than c/n, which bounds the total.
        const double n = static_cast<double>(weights.size());
        if (sum > 1.0 - interaction_mass + interaction_mass * (n - 1.0) / n + kWeightSumTolerance)
            throw std::invalid_argument("multilinear weights are too large for interaction_mass");
    }
    if (model == Model::linear && std::abs(sum - 1.0) > linear_sum_tolerance(weights.size()))
        throw std::invalid_argument("linear weights sum to " + std::to_string(sum) +
                                    ", expected 1");
}

double linear_utility(std::span<const double> u, std::span<const double> w) {
    check_dims(u, w, "linear_utility");
    double s = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) s += w[j] * u[j];
    return s;
}

// Equal two-criterion weights are the common case; sqrt is exact where pow
// is not guaranteed to be.
double product_utility(std::span<const double> u, std::span<const double> w) {
    check_dims(u, w, "product_utility");
    double p = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] <= 0.0) return 0.0;
        p *= w[j] == 0.5 ? std::sqrt(u[j]) : std::pow(u[j], w[j]);
    }
    return p;
}

double interaction_term_count(std::size_t n) {
    if (n >= 64) return std::ldexp(1.0, static_cast<int>(n)) - static_cast<double>(n) - 1.0;
    return static_cast<double>((std::uint64_t{1} << n) - n - 1);
}

double multilinear_utility(std::span<const double> u, std::span<const double> w,
                           double interaction_mass) {
    check_dims(u, w, "multilinear_utility");
    if (u.size() < 2) throw std::invalid_argument("multilinear_utility: needs n >= 2");
    // prod(1 + u_j) expands to 1 + sum(u_j) + (sum of every product of order >= 2).
    double main = 0.0;
    double sum_u = 0.0;
    double expanded = 1.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        main += w[j] * u[j];
        sum_u += u[j];
        expanded *= 1.0 + u[j];
    }
    if (interaction_mass == 0.0) return main;
    double interactions = expanded - 1.0 - sum_u;
    if (u.size() == 2) interactions = u[0] * u[1];
    return main + interaction_mass / interaction_term_count(u.size()) * interactions;
}

double slos_loss(std::span<const double> u, std::span<const double> w) {
    check_dims(u, w, "slos_loss");
    double s = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] <= 0.0) return std::numeric_limits<double>::infinity();
        s += w[j] == 0.5 ? 1.0 / std::sqrt(u[j]) : std::pow(u[j], -w[j]);
    }
    return s;
}

double raw_score(std::span<const double> u, const WeightSet& weights) {
    switch (weights.model) {
        case Model::linear: return linear_utility(u, weights.weights);
        case Model::product: return product_utility(u, weights.weights);
        case Model::multilinear:
            return multilinear_utility(u, weights.weights, weights.interaction_mass);
        case Model::slos: return slos_loss(u, weights.weights);
    }
    throw std::logic_error("raw_score: bad model");
}

Score score(std::span<const double> u, const WeightSet& weights) {
    return {raw_score(u, weights), native_flavor(weights.model), weights.model};
}

Score to_loss(const Score& s) {
    if (s.model == Model::slos || s.flavor != Flavor::utility)
        throw std::invalid_argument("to_loss: only utility scores can be converted");
    return {1.0 - s.value, Flavor::loss, s.model, s.value};
}

double score_difference(const Score& s_i, const Score& s_h) {
    if (s_i.model != s_h.model || s_i.flavor != s_h.flavor)
        throw std::invalid_argument("score_difference: scores differ in model or flavor");
    if (std::isinf(s_i.value) && std::isinf(s_h.value) && s_i.value == s_h.value) return 0.0;
    // (1 - u_i) - (1 - u_h), exactly the negated utility difference.
    if (s_i.flavor == Flavor::loss && s_i.model != Model::slos)
        return s_h.source_utility - s_i.source_utility;
    return s_i.value - s_h.value;
}

}  // namespace brmcda
