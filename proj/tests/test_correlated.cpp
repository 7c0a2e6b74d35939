#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>
#include <numbers>

#include "brmcda/correlated.hpp"
#include "brmcda/rng.hpp"

using namespace brmcda;

TEST_CASE("bivariate normal cdf reference values") {
    CHECK(bivariate_normal_cdf(0.0, 0.0, 0.0) == doctest::Approx(0.25).epsilon(1e-10));
    // Orthant probability 1/4 + asin(r) / (2 pi).
    for (double r : {-0.9, -0.5, 0.3, 0.8, 0.99})
        CHECK(bivariate_normal_cdf(0.0, 0.0, r) ==
              doctest::Approx(0.25 + std::asin(r) / (2.0 * std::numbers::pi)).epsilon(1e-9));
    // r = 0 factorises.
    const double phi1 = 0.5 * std::erfc(-1.0 / std::sqrt(2.0));
    const double phim = 0.5 * std::erfc(0.5 / std::sqrt(2.0));
    CHECK(bivariate_normal_cdf(1.0, -0.5, 0.0) == doctest::Approx(phi1 * phim).epsilon(1e-10));
    // Comonotone and antithetic limits.
    CHECK(bivariate_normal_cdf(0.3, -0.2, 1.0) == doctest::Approx(0.5 * std::erfc(0.2 / std::sqrt(2.0))).epsilon(1e-9));
    CHECK(bivariate_normal_cdf(0.3, 0.1, -1.0) == doctest::Approx(0.5 * std::erfc(-0.3 / std::sqrt(2.0)) + 0.5 * std::erfc(-0.1 / std::sqrt(2.0)) - 1.0).epsilon(1e-9));
}

TEST_CASE("Frechet bounds for Bernoulli pairs") {
    const auto [lo, hi] = bernoulli_correlation_bounds(0.1, 0.9);
    // max P(both) = min(p1, p2) = 0.1 gives r = (0.1 - 0.09) / 0.09.
    CHECK(hi == doctest::Approx(0.01 / 0.09));
    CHECK(lo == doctest::Approx(-1.0));
    const auto [lo2, hi2] = bernoulli_correlation_bounds(0.3, 0.3);
    CHECK(hi2 == doctest::Approx(1.0));
    CHECK(lo2 == doctest::Approx(-0.09 / 0.21));
}

TEST_CASE("symmetric marginals: latent correlation is sin(pi rho / 2)") {
    for (double rho : {-0.8, -0.3, 0.2, 0.5, 0.8}) {
        CorrelatedBinaryPair g(0.5, 0.5, rho);
        CHECK_FALSE(g.clamped());
        CHECK(g.latent_correlation() == doctest::Approx(std::sin(std::numbers::pi * rho / 2.0)).epsilon(1e-7));
    }
}

TEST_CASE("empirical correlation hits feasible targets") {
    Rng rng(77);
    for (auto [p1, p2, rho] : std::vector<std::tuple<double, double, double>>{
             {0.5, 0.5, 0.8}, {0.3, 0.7, -0.4}, {0.2, 0.2, 0.8}, {0.7, 0.3, 0.3},
             {0.5, 0.5, -0.8}, {0.3, 0.3, 0.0}, {0.9, 0.9, 0.5}}) {
        CorrelatedBinaryPair g(p1, p2, rho);
        REQUIRE_FALSE(g.clamped());
        const auto counts = g.draw_counts(rng, 100000);
        INFO("p1=" << p1 << " p2=" << p2 << " rho=" << rho);
        CHECK(std::abs(counts.correlation() - rho) <= 0.02);
        CHECK(std::abs(counts.first() / 1e5 - p1) <= 0.01);
        CHECK(std::abs(counts.second() / 1e5 - p2) <= 0.01);
    }
}

TEST_CASE("infeasible targets are clamped and reported") {
    CorrelatedBinaryPair g(0.1, 0.9, 0.8);
    CHECK(g.clamped());
    CHECK(g.requested_correlation() == 0.8);
    CHECK(g.effective_correlation() == doctest::Approx(0.01 / 0.09));
    Rng rng(78);
    const auto counts = g.draw_counts(rng, 100000);
    CHECK(std::abs(counts.correlation() - g.effective_correlation()) <= 0.02);
    CHECK_THROWS(CorrelatedBinaryPair(0.0, 0.5, 0.1));
    CHECK_THROWS(CorrelatedBinaryPair(0.5, 0.5, 1.5));
}

TEST_CASE("generators differing only in correlation share random numbers") {
    CorrelatedBinaryPair g0(0.4, 0.6, 0.0), g1(0.4, 0.6, 0.8);
    Rng a(5), b(5);
    long same_first = 0;
    for (int i = 0; i < 10000; ++i) same_first += g0.draw(a).first == g1.draw(b).first;
    // The first outcome depends only on z1, which is common to both.
    CHECK(same_first == 10000);
}
