#pragma once

#include <utility>

#include "brmcda/rng.hpp"

namespace brmcda {

// P(Z1 <= a, Z2 <= b) for standard normals with correlation r, |r| <= 1.
double bivariate_normal_cdf(double a, double b, double r);

// Attainable Pearson correlation range for two Bernoulli variables with
// success probabilities p1, p2 (the Frechet-Hoeffding bounds).
std::pair<double, double> bernoulli_correlation_bounds(double p1, double p2);

struct PairCounts {
    long both = 0;
    long first_only = 0;
    long second_only = 0;
    long neither = 0;

    long first() const { return both + first_only; }
    long second() const { return both + second_only; }
    long total() const { return both + first_only + second_only + neither; }
    double correlation() const;
};

// Paired Bernoulli(p1), Bernoulli(p2) outcomes with target Pearson
// correlation, generated by thresholding a bivariate normal whose latent
// correlation reproduces the target joint success probability
// (Emrich-Piedmonte). Targets outside the attainable range are clamped to
// the nearest bound and flagged.
class CorrelatedBinaryPair {
public:
    CorrelatedBinaryPair(double p1, double p2, double rho);

    double requested_correlation() const { return requested_; }
    double effective_correlation() const { return effective_; }
    double latent_correlation() const { return latent_; }
    bool clamped() const { return clamped_; }

    // One patient. Consumes exactly two standard normals from `rng`, so
    // generators that differ only in correlation stay on common random
    // numbers.
    std::pair<bool, bool> draw(Rng& rng) const;
    PairCounts draw_counts(Rng& rng, long n) const;

private:
    double p1_;
    double p2_;
    double requested_;
    double effective_;
    double latent_ = 0.0;
    double cut1_;
    double cut2_;
    double residual_scale_ = 1.0;
    bool clamped_ = false;
};

}  // namespace brmcda
