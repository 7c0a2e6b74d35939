#pragma once

#include <span>
#include <vector>

#include "brmcda/models.hpp"

namespace brmcda {

// Maps weights elicited for the linear model onto the other aggregation
// models so that each reflects the same average trade-off, matched through
// the slope of the contour tangent at u_1 = u_2 = 0.5.

double map_to_product(double linear_weight);

// max(0, w - c/n). The raw value goes negative once w < c/n.
double map_to_multilinear(double linear_weight, double interaction_mass, std::size_t n);

// Midpoint contour slope of a two-criterion SLoS model with weights
// (w, 1 - w): [w / (1 - w)] * 2^(2w - 1). Strictly increasing in w.
double slos_midpoint_odds(double slos_weight);

// Root of slos_midpoint_odds(w) = w_l / (1 - w_l), found by bisection.
double map_to_slos(double linear_weight);

struct MappingRequest {
    std::vector<double> linear_weights;
    double interaction_mass = 0.0;
    Model target = Model::linear;
};

struct MappingResult {
    WeightSet weights;
    // Indices whose multilinear weight was floored at zero.
    std::vector<std::size_t> floored;
};

// Element-wise application of the scalar maps. The result is not
// renormalised.
MappingResult map_weight_vector(const MappingRequest& request);

// Slope of the contour tangent at (0.5, 0.5) in the (u_1, 1 - u_2) plane for
// a two-criterion weight set: the ratio of the score's partial derivatives.
double midpoint_slope(const WeightSet& weights);

}  // namespace brmcda
