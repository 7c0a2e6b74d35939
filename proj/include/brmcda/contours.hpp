#pragma once

#include <cstddef>
#include <vector>

#include "brmcda/models.hpp"

namespace brmcda {

// Two-criterion weight set from a single benefit weight w: (w, 1 - w) for
// linear/product/SLoS and (w, 1 - w - c) with interaction mass c for the
// multilinear model.
WeightSet two_criterion_weights(Model model, double w, double interaction_mass);

// Loss of a two-criterion treatment with benefit partial value u_1 and risk
// probability 1 - u_2. Utility models report 1 - utility.
double two_criterion_loss(const WeightSet& weights, double benefit, double risk);

// Loss over the regular grid {0, 1/(n-1), ..., 1}^2 of (benefit, risk).
struct LossGrid {
    WeightSet weights;
    std::size_t size = 0;
    std::vector<double> axis;
    std::vector<double> loss;  // loss[b * size + r]

    double at(std::size_t benefit_index, std::size_t risk_index) const {
        return loss[benefit_index * size + risk_index];
    }
};

inline constexpr std::size_t kMaxServiceGrid = 201;

LossGrid loss_grid(const WeightSet& weights, std::size_t size);

}  // namespace brmcda
