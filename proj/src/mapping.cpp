#include "brmcda/mapping.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace brmcda {

namespace {

constexpr double kBracketEps = 1e-12;
constexpr int kBisectionMaxIter = 200;

void require_open_unit(double w, const char* who) {
    if (!(w > 0.0 && w < 1.0))
        throw std::invalid_argument(std::string(who) + ": linear weight " + std::to_string(w) +
                                    " outside (0, 1)");
}

}  // namespace

double map_to_product(double linear_weight) { return linear_weight; }

double map_to_multilinear(double linear_weight, double interaction_mass, std::size_t n) {
    if (!(interaction_mass >= 0.0 && interaction_mass <= 1.0))
        throw std::invalid_argument("map_to_multilinear: interaction_mass outside [0, 1]");
    if (n < 2) throw std::invalid_argument("map_to_multilinear: needs n >= 2");
    const double raw = linear_weight - interaction_mass / static_cast<double>(n);
    return raw > 0.0 ? raw : 0.0;
}

double slos_midpoint_odds(double slos_weight) {
    return slos_weight / (1.0 - slos_weight) * std::exp2(2.0 * slos_weight - 1.0);
}

double map_to_slos(double linear_weight) {
    require_open_unit(linear_weight, "map_to_slos");
    const double target = linear_weight / (1.0 - linear_weight);
    double lo = kBracketEps;
    double hi = 1.0 - kBracketEps;
    // Bisect to full double precision: near w = 1 the odds grow like
    // 1 / (1 - s)^2, so a fixed tolerance on s loses accuracy in the odds.
    for (int it = 0; it < kBisectionMaxIter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double odds = slos_midpoint_odds(mid);
        if (odds == target) return mid;
        if (odds < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

MappingResult map_weight_vector(const MappingRequest& request) {
    const auto& wl = request.linear_weights;
    const std::size_t n = wl.size();
    WeightSet linear{Model::linear, wl, 0.0};
    linear.validate();
    for (double w : wl) require_open_unit(w, "map_weight_vector");

    MappingResult result;
    result.weights.model = request.target;
    result.weights.weights.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double& out = result.weights.weights[j];
        switch (request.target) {
            case Model::linear: out = wl[j]; break;
            case Model::product: out = map_to_product(wl[j]); break;
            case Model::multilinear:
                out = map_to_multilinear(wl[j], request.interaction_mass, n);
                if (wl[j] - request.interaction_mass / static_cast<double>(n) <= 0.0)
                    result.floored.push_back(j);
                break;
            case Model::slos: out = map_to_slos(wl[j]); break;
        }
    }
    if (request.target == Model::multilinear)
        result.weights.interaction_mass = request.interaction_mass;
    return result;
}

double midpoint_slope(const WeightSet& weights) {
    if (weights.size() != 2)
        throw std::invalid_argument("midpoint_slope: defined for two criteria only");
    const double w1 = weights.weights[0];
    const double w2 = weights.weights[1];
    switch (weights.model) {
        case Model::linear:
        case Model::product:
            // d/du_j of u_1^w1 u_2^w2 at the midpoint is proportional to w_j.
            return w1 / w2;
        case Model::multilinear: {
            const double c = weights.interaction_mass;
            return (w1 + 0.5 * c) / (w2 + 0.5 * c);
        }
        case Model::slos:
            // d/du_j of u_j^-w_j at 0.5 is -w_j 2^(w_j + 1).
            return w1 / w2 * std::exp2(w1 - w2);
    }
    throw std::logic_error("midpoint_slope: bad model");
}

}  // namespace brmcda
