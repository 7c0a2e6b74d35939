#include "brmcda/correlated.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/random/normal_distribution.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace brmcda {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

}  // namespace

double bivariate_normal_cdf(double a, double b, double r) {
    if (r >= 1.0) return normal_cdf(std::min(a, b));
    if (r <= -1.0) return std::max(0.0, normal_cdf(a) + normal_cdf(b) - 1.0);
    if (r == 0.0) return normal_cdf(a) * normal_cdf(b);
    // Plackett: dPhi2/dr equals the bivariate density at (a, b).
    auto density = [a, b](double t) {
        const double s = 1.0 - t * t;
        if (s <= 0.0) return 0.0;
        return std::exp(-(a * a - 2.0 * t * a * b + b * b) / (2.0 * s)) /
               (2.0 * std::numbers::pi * std::sqrt(s));
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double integral = r > 0.0 ? integrator.integrate(density, 0.0, r)
                                    : -integrator.integrate(density, r, 0.0);
    return std::clamp(normal_cdf(a) * normal_cdf(b) + integral, 0.0, 1.0);
}

std::pair<double, double> bernoulli_correlation_bounds(double p1, double p2) {
    const double sd = std::sqrt(p1 * (1.0 - p1) * p2 * (1.0 - p2));
    const double lower = (std::max(0.0, p1 + p2 - 1.0) - p1 * p2) / sd;
    const double upper = (std::min(p1, p2) - p1 * p2) / sd;
    return {lower, upper};
}

double PairCounts::correlation() const {
    const double n = static_cast<double>(total());
    if (n == 0.0) return 0.0;
    const double m1 = first() / n;
    const double m2 = second() / n;
    const double cov = both / n - m1 * m2;
    const double var = m1 * (1.0 - m1) * m2 * (1.0 - m2);
    return var > 0.0 ? cov / std::sqrt(var) : 0.0;
}

CorrelatedBinaryPair::CorrelatedBinaryPair(double p1, double p2, double rho)
    : p1_(p1), p2_(p2), requested_(rho), effective_(rho) {
    if (!(p1 > 0.0 && p1 < 1.0) || !(p2 > 0.0 && p2 < 1.0))
        throw std::invalid_argument("correlated pair: marginal probabilities must lie in (0, 1)");
    if (!(rho >= -1.0 && rho <= 1.0))
        throw std::invalid_argument("correlated pair: correlation must lie in [-1, 1]");
    cut1_ = normal_quantile(p1);
    cut2_ = normal_quantile(p2);

    const auto [lower, upper] = bernoulli_correlation_bounds(p1, p2);
    if (rho > upper) {
        effective_ = upper;
        clamped_ = true;
    } else if (rho < lower) {
        effective_ = lower;
        clamped_ = true;
    }
    if (effective_ == 0.0) return;
    if (effective_ >= upper) {
        latent_ = 1.0;
    } else if (effective_ <= lower) {
        latent_ = -1.0;
    } else {
        const double sd = std::sqrt(p1 * (1.0 - p1) * p2 * (1.0 - p2));
        const double target = p1 * p2 + effective_ * sd;
        double lo = -1.0;
        double hi = 1.0;
        for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (bivariate_normal_cdf(cut1_, cut2_, mid) < target)
                lo = mid;
            else
                hi = mid;
        }
        latent_ = 0.5 * (lo + hi);
    }
    residual_scale_ = std::sqrt(std::max(0.0, 1.0 - latent_ * latent_));
}

std::pair<bool, bool> CorrelatedBinaryPair::draw(Rng& rng) const {
    boost::random::normal_distribution<double> normal;
    const double z1 = normal(rng);
    const double e = normal(rng);
    const double z2 = latent_ * z1 + residual_scale_ * e;
    return {z1 <= cut1_, z2 <= cut2_};
}

PairCounts CorrelatedBinaryPair::draw_counts(Rng& rng, long n) const {
    PairCounts counts;
    for (long k = 0; k < n; ++k) {
        const auto [first, second] = draw(rng);
        if (first && second)
            ++counts.both;
        else if (first)
            ++counts.first_only;
        else if (second)
            ++counts.second_only;
        else
            ++counts.neither;
    }
    return counts;
}

}  // namespace brmcda
