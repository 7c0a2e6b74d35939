#include "brmcda/posterior.hpp"

#include <boost/random/normal_distribution.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace brmcda {

void BinomialOutcome::validate() const {
    if (patients <= 0)
        throw std::invalid_argument("patients must be positive (got " + std::to_string(patients) +
                                    ")");
    if (events < 0 || events > patients)
        throw std::invalid_argument("events must lie in [0, patients] (got " +
                                    std::to_string(events) + "/" + std::to_string(patients) + ")");
}

double BetaPosterior::variance() const {
    const double n = a + b;
    return a * b / (n * n * (n + 1.0));
}

void BetaPosterior::validate() const {
    if (!(a >= 0.0 && b >= 0.0) || !(a + b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("Beta posterior needs a, b >= 0 and a + b > 0");
}

BetaPosterior posterior_from_counts(const BinomialOutcome& outcome) {
    outcome.validate();
    return {static_cast<double>(outcome.events),
            static_cast<double>(outcome.patients - outcome.events)};
}

double draw_gamma(Rng& rng, double shape) {
    if (shape < 1.0) {
        double u = rng.uniform();
        while (u == 0.0) u = rng.uniform();
        return draw_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    boost::random::normal_distribution<double> normal;
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double draw_beta(Rng& rng, const BetaPosterior& posterior) {
    if (posterior.a == 0.0) return 0.0;
    if (posterior.b == 0.0) return 1.0;
    const double x = draw_gamma(rng, posterior.a);
    const double y = draw_gamma(rng, posterior.b);
    return x / (x + y);
}

void draw_samples(const BetaPosterior& posterior, Rng& rng, std::vector<double>& out,
                  std::size_t m) {
    out.resize(m);
    if (posterior.is_point_mass()) {
        const double value = posterior.a == 0.0 ? 0.0 : 1.0;
        for (auto& v : out) v = value;
        return;
    }
    for (auto& v : out) v = draw_beta(rng, posterior);
}

std::vector<double> draw_samples(const BetaPosterior& posterior, std::size_t m,
                                 std::uint64_t seed) {
    posterior.validate();
    Rng rng(seed);
    std::vector<double> out;
    draw_samples(posterior, rng, out, m);
    return out;
}

}  // namespace brmcda
