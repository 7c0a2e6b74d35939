#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <numeric>
#include <set>
#include <vector>

#include "brmcda/posterior.hpp"
#include "brmcda/rng.hpp"

using namespace brmcda;

namespace {

struct Moments {
    double mean;
    double variance;
};

Moments moments(const std::vector<double>& x) {
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return {mean, ss / (n - 1.0)};
}

}  // namespace

TEST_CASE("stream seeds") {
    CHECK(stream_seed(1, {2, 3}) == stream_seed(1, {2, 3}));
    CHECK(stream_seed(1, {2, 3}) != stream_seed(1, {3, 2}));
    CHECK(stream_seed(1, {2}) != stream_seed(2, {2}));
    CHECK(stream_seed(1, {0}) != stream_seed(1, {0, 0}));
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 0; a < 50; ++a)
        for (std::uint64_t b = 0; b < 50; ++b) seen.insert(stream_seed(7, {a, b}));
    CHECK(seen.size() == 2500);
}

TEST_CASE("rng uniform range and determinism") {
    Rng a(5), b(5), c(6);
    bool differs = false;
    for (int i = 0; i < 10000; ++i) {
        const double u = a.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        CHECK(u == b.uniform());
        differs = differs || (u != c.uniform());
    }
    CHECK(differs);
    Rng d(5), e(5);
    e.jump();
    CHECK(d() != e());
}

TEST_CASE("posterior from counts uses a Beta(0, 0) prior") {
    const auto p = posterior_from_counts({51, 96});
    CHECK(p.a == 51);
    CHECK(p.b == 45);
    CHECK(p.mean() == doctest::Approx(51.0 / 96.0));
    CHECK(posterior_from_counts({0, 50}).is_point_mass());
    CHECK(posterior_from_counts({50, 50}).is_point_mass());
    CHECK_THROWS(posterior_from_counts({5, 0}));
    CHECK_THROWS(posterior_from_counts({6, 5}));
    CHECK_THROWS(posterior_from_counts({-1, 5}));
}

TEST_CASE("degenerate posteriors are point masses") {
    const auto zero = draw_samples(posterior_from_counts({0, 100}), 1000, 3);
    const auto one = draw_samples(posterior_from_counts({100, 100}), 1000, 3);
    for (double v : zero) CHECK(v == 0.0);
    for (double v : one) CHECK(v == 1.0);
}

TEST_CASE("beta draws match the posterior moments within 4 standard errors") {
    const std::size_t m = 200000;
    for (auto [x, n] : std::vector<std::pair<long, long>>{
             {51, 96}, {1, 102}, {8, 102}, {50, 100}, {99, 100}, {1, 2}, {3, 1000}}) {
        const auto post = posterior_from_counts({x, n});
        const auto draws = draw_samples(post, m, 1000 + x);
        const auto mo = moments(draws);
        const double se_mean = std::sqrt(post.variance() / m);
        INFO("x=" << x << " n=" << n);
        CHECK(std::abs(mo.mean - post.mean()) <= 4.0 * se_mean);
        // Variance of the sample variance ~ (mu4 - sigma^4)/m; bound with a
        // loose factor via the Beta fourth moment.
        const double a = post.a, b = post.b;
        const double var = post.variance();
        const double kurt_excess =
            6.0 * ((a - b) * (a - b) * (a + b + 1.0) - a * b * (a + b + 2.0)) /
            (a * b * (a + b + 2.0) * (a + b + 3.0));
        const double se_var = var * std::sqrt((2.0 + kurt_excess) / m);
        CHECK(std::abs(mo.variance - var) <= 4.0 * se_var);
        for (double v : draws) {
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 1.0);
        }
    }
}

TEST_CASE("gamma draws have the right mean for small and large shapes") {
    Rng rng(9);
    for (double shape : {0.3, 1.0, 2.5, 50.0}) {
        const int m = 200000;
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += draw_gamma(rng, shape);
        const double mean = s / m;
        CHECK(std::abs(mean - shape) <= 4.0 * std::sqrt(shape / m));
    }
}

TEST_CASE("draws are bit-identical under the same seed") {
    const auto p = posterior_from_counts({22, 102});
    CHECK(draw_samples(p, 5000, 42) == draw_samples(p, 5000, 42));
    CHECK(draw_samples(p, 5000, 42) != draw_samples(p, 5000, 43));
}
