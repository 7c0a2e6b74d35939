#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "brmcda/rng.hpp"

namespace brmcda {

struct BinomialOutcome {
    long events = 0;
    long patients = 0;

    void validate() const;
};

// Beta(a, b) posterior. a == 0 or b == 0 is a point mass at 0 or 1, which is
// what a Beta(0, 0) prior gives for all-failure or all-success data.
struct BetaPosterior {
    double a = 1.0;
    double b = 1.0;

    bool is_point_mass() const { return a == 0.0 || b == 0.0; }
    double mean() const { return a / (a + b); }
    double variance() const;
    void validate() const;
};

BetaPosterior posterior_from_counts(const BinomialOutcome& outcome);

// Gamma(shape, 1) by Marsaglia-Tsang, boosted by U^(1/shape) for shape < 1.
double draw_gamma(Rng& rng, double shape);

// One Beta draw via the gamma ratio; the point value for degenerate
// posteriors.
double draw_beta(Rng& rng, const BetaPosterior& posterior);

void draw_samples(const BetaPosterior& posterior, Rng& rng, std::vector<double>& out,
                  std::size_t m);
std::vector<double> draw_samples(const BetaPosterior& posterior, std::size_t m,
                                 std::uint64_t seed);

}  // namespace brmcda
