#include "brmcda/contours.hpp"

#include <array>
#include <stdexcept>

namespace brmcda {

WeightSet two_criterion_weights(Model model, double w, double interaction_mass) {
    WeightSet ws;
    ws.model = model;
    if (model == Model::multilinear) {
        ws.weights = {w, 1.0 - w - interaction_mass};
        ws.interaction_mass = interaction_mass;
    } else {
        ws.weights = {w, 1.0 - w};
    }
    ws.validate();
    return ws;
}

double two_criterion_loss(const WeightSet& weights, double benefit, double risk) {
    const std::array<double, 2> u = {benefit, 1.0 - risk};
    const double s = raw_score(u, weights);
    return native_flavor(weights.model) == Flavor::loss ? s : 1.0 - s;
}

LossGrid loss_grid(const WeightSet& weights, std::size_t size) {
    if (size < 2) throw std::invalid_argument("grid size must be at least 2");
    if (weights.size() != 2) throw std::invalid_argument("contours need two criteria");
    weights.validate();
    LossGrid g;
    g.weights = weights;
    g.size = size;
    g.axis.resize(size);
    for (std::size_t i = 0; i < size; ++i)
        g.axis[i] = static_cast<double>(i) / static_cast<double>(size - 1);
    g.loss.resize(size * size);
    for (std::size_t b = 0; b < size; ++b)
        for (std::size_t r = 0; r < size; ++r)
            g.loss[b * size + r] = two_criterion_loss(weights, g.axis[b], g.axis[r]);
    return g;
}

}  // namespace brmcda
