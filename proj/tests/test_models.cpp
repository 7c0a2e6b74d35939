#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <limits>
#include <random>
#include <vector>

#include "brmcda/criteria.hpp"
#include "brmcda/models.hpp"

using namespace brmcda;

namespace {

std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t n) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(n);
    double s = 0.0;
    for (auto& x : w) s += (x = e(gen) + 1e-3);
    for (auto& x : w) x /= s;
    return w;
}

std::vector<double> random_unit(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(gen);
    return v;
}

// Sum over every subset S with |S| >= 2 of prod_{j in S} u_j.
double interaction_sum_by_subsets(const std::vector<double>& u) {
    const std::size_t n = u.size();
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        double p = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) p *= u[j];
        total += p;
    }
    return total;
}

}  // namespace

TEST_CASE("partial values are linear and clamped") {
    CriterionSpec response{"response", CriterionKind::benefit, 0.8, 0.2};
    CriterionSpec nausea{"nausea", CriterionKind::risk, 0.0, 0.5};
    CHECK(partial_value(response, 0.5) == doctest::Approx(0.5));
    CHECK(partial_value(response, 0.2) == 0.0);
    CHECK(partial_value(response, 0.95) == 1.0);
    CHECK(partial_value(response, 0.1) == 0.0);
    CHECK(partial_value(nausea, 0.1) == doctest::Approx(0.8));
    CHECK(partial_value(nausea, 0.7) == 0.0);
    CHECK(partial_value(nausea, 0.0) == 1.0);

    const std::vector<CriterionSpec> specs = {response, nausea};
    const std::vector<double> perf = {0.65, 0.25};
    const auto u = partial_values(specs, perf);
    CHECK(u[0] == doctest::Approx(0.75));
    CHECK(u[1] == doctest::Approx(0.5));
}

TEST_CASE("criterion validation") {
    CHECK_THROWS_AS((CriterionSpec{"x", CriterionKind::benefit, 0.2, 0.8}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((CriterionSpec{"x", CriterionKind::risk, 0.5, 0.0}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((CriterionSpec{"x", CriterionKind::benefit, 0.5, 0.5}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW((CriterionSpec{"x", CriterionKind::risk, 0.0, 0.5}.validate()));
    CHECK(parse_criterion_kind("risk") == CriterionKind::risk);
    CHECK_THROWS(parse_criterion_kind("harm"));
}

TEST_CASE("model names round-trip") {
    for (Model m : kAllModels) CHECK(parse_model(to_string(m)) == m);
    CHECK(parse_model("multi-linear") == Model::multilinear);
    CHECK_THROWS_AS(parse_model("additive"), std::invalid_argument);
}

TEST_CASE("weight validation") {
    CHECK_NOTHROW((WeightSet{Model::linear, {0.5, 0.5}, 0.0}.validate()));
    CHECK_NOTHROW((WeightSet{Model::linear, {0.58, 0.11, 0.15, 0.15}, 0.0}.validate()));
    CHECK_THROWS((WeightSet{Model::linear, {0.6, 0.6}, 0.0}.validate()));
    CHECK_THROWS((WeightSet{Model::product, {0.0, 1.0}, 0.0}.validate()));
    CHECK_THROWS((WeightSet{Model::slos, {-0.1, 1.1}, 0.0}.validate()));
    CHECK_THROWS((WeightSet{Model::linear, {std::nan(""), 1.0}, 0.0}.validate()));
    CHECK_NOTHROW((WeightSet{Model::multilinear, {0.0, 0.85}, 0.2}.validate()));
    CHECK_THROWS((WeightSet{Model::multilinear, {0.5, 0.5}, 0.2}.validate()));
    CHECK_THROWS((WeightSet{Model::multilinear, {1.0}, 0.0}.validate()));
    CHECK_THROWS((WeightSet{Model::multilinear, {0.3, 0.3}, 1.5}.validate()));
}

TEST_CASE("scores at known points") {
    const std::vector<double> half = {0.5, 0.5};
    const std::vector<double> w = {0.5, 0.5};
    CHECK(linear_utility(half, w) == doctest::Approx(0.5));
    CHECK(product_utility(half, w) == doctest::Approx(0.5));
    CHECK(slos_loss(half, w) == doctest::Approx(2.0 * std::sqrt(2.0)));
    const std::vector<double> wml = {0.4, 0.4};
    CHECK(multilinear_utility(half, wml, 0.2) == doctest::Approx(0.4 + 0.2 * 0.25));

    const std::vector<double> u = {0.2, 0.9};
    const std::vector<double> w2 = {0.3, 0.7};
    CHECK(linear_utility(u, w2) == doctest::Approx(0.69));
    CHECK(product_utility(u, w2) == doctest::Approx(std::pow(0.2, 0.3) * std::pow(0.9, 0.7)));
    CHECK(slos_loss(u, w2) == doctest::Approx(std::pow(0.2, -0.3) + std::pow(0.9, -0.7)));

    // Three criteria: c spread over 2^3 - 3 - 1 = 4 interaction terms.
    const std::vector<double> u3 = {0.5, 0.4, 0.2};
    const std::vector<double> w3 = {0.3, 0.3, 0.2};
    const double inter = 0.5 * 0.4 + 0.5 * 0.2 + 0.4 * 0.2 + 0.5 * 0.4 * 0.2;
    CHECK(multilinear_utility(u3, w3, 0.2) ==
          doctest::Approx(0.3 * 0.5 + 0.3 * 0.4 + 0.2 * 0.2 + 0.2 / 4.0 * inter));
    CHECK(interaction_term_count(2) == 1.0);
    CHECK(interaction_term_count(4) == 11.0);
}

TEST_CASE("score ranges at the corners") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::vector<double> ones(n, 1.0);
        const std::vector<double> w(n, 1.0 / n);
        const std::vector<double> wml(n, (1.0 - 0.2) / n);
        CHECK(linear_utility(ones, w) == doctest::Approx(1.0));
        CHECK(product_utility(ones, w) == 1.0);
        CHECK(multilinear_utility(ones, wml, 0.2) == doctest::Approx(1.0));
        CHECK(slos_loss(ones, w) == doctest::Approx(static_cast<double>(n)));
    }
}

TEST_CASE("AM-GM: product utility never exceeds linear utility") {
    std::mt19937_64 gen(11);
    int violations = 0;
    for (int t = 0; t < 100000; ++t) {
        const std::size_t n = 2 + t % 5;
        const auto w = random_simplex(gen, n);
        const auto u = random_unit(gen, n);
        if (product_utility(u, w) > linear_utility(u, w) + 1e-12) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("multilinear with c = 0 equals linear") {
    std::mt19937_64 gen(12);
    double worst = 0.0;
    for (int t = 0; t < 20000; ++t) {
        const std::size_t n = 2 + t % 6;
        const auto w = random_simplex(gen, n);
        const auto u = random_unit(gen, n);
        worst = std::max(worst, std::abs(multilinear_utility(u, w, 0.0) - linear_utility(u, w)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("multilinear interaction sum matches subset enumeration") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 2 + t % 9;
        const double c = 0.3;
        auto w = random_simplex(gen, n);
        for (auto& x : w) x *= 1.0 - c;
        const auto u = random_unit(gen, n);
        double main = 0.0;
        for (std::size_t j = 0; j < n; ++j) main += w[j] * u[j];
        const double terms = std::pow(2.0, static_cast<double>(n)) - n - 1.0;
        const double oracle = main + c / terms * interaction_sum_by_subsets(u);
        REQUIRE(multilinear_utility(u, w, c) == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("annihilation at a zero partial value") {
    std::mt19937_64 gen(14);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 2 + t % 4;
        const auto w = random_simplex(gen, n);
        auto u = random_unit(gen, n);
        u[t % n] = 0.0;
        CHECK(product_utility(u, w) == 0.0);
        CHECK(std::isinf(slos_loss(u, w)));
        // The additive models are not annihilated by one zero.
        if (n > 1) CHECK(linear_utility(u, w) >= 0.0);
    }
    const std::vector<double> u = {0.0, 1.0};
    const std::vector<double> w = {0.5, 0.5};
    CHECK(linear_utility(u, w) == doctest::Approx(0.5));
    CHECK(multilinear_utility(u, std::vector<double>{0.4, 0.4}, 0.2) == doctest::Approx(0.4));
}

TEST_CASE("monotonicity in each partial value") {
    std::mt19937_64 gen(15);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 20000; ++t) {
        const std::size_t n = 2 + t % 4;
        const auto w = random_simplex(gen, n);
        auto wml = w;
        for (auto& x : wml) x *= 0.8;
        const auto lo = random_unit(gen, n);
        auto hi = lo;
        const std::size_t j = t % n;
        hi[j] = lo[j] + (1.0 - lo[j]) * unit(gen);
        CHECK(linear_utility(hi, w) >= linear_utility(lo, w));
        CHECK(product_utility(hi, w) >= product_utility(lo, w));
        CHECK(multilinear_utility(hi, wml, 0.2) >= multilinear_utility(lo, wml, 0.2));
        CHECK(slos_loss(hi, w) <= slos_loss(lo, w));
    }
}

TEST_CASE("swap symmetry with swapped weights") {
    std::mt19937_64 gen(16);
    for (int t = 0; t < 1000; ++t) {
        const auto w = random_simplex(gen, 2);
        const auto u = random_unit(gen, 2);
        const std::vector<double> ws = {w[1], w[0]};
        const std::vector<double> us = {u[1], u[0]};
        CHECK(linear_utility(u, w) == doctest::Approx(linear_utility(us, ws)).epsilon(1e-14));
        CHECK(product_utility(u, w) == doctest::Approx(product_utility(us, ws)).epsilon(1e-14));
        CHECK(slos_loss(u, w) == doctest::Approx(slos_loss(us, ws)).epsilon(1e-14));
        const std::vector<double> wm = {0.8 * w[0], 0.8 * w[1]};
        const std::vector<double> wms = {wm[1], wm[0]};
        CHECK(multilinear_utility(u, wm, 0.2) ==
              doctest::Approx(multilinear_utility(us, wms, 0.2)).epsilon(1e-14));
    }
}

TEST_CASE("loss/utility duality is exact") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> tiny(0.0, 1e-17);
    int mismatches = 0;
    for (int t = 0; t < 100000; ++t) {
        const Model m = t % 3 == 0 ? Model::linear : t % 3 == 1 ? Model::product : Model::multilinear;
        const auto w = random_simplex(gen, 3);
        WeightSet ws{m, w, 0.0};
        if (m == Model::multilinear) {
            for (auto& x : ws.weights) x *= 0.8;
            ws.interaction_mass = 0.2;
        }
        auto ui = random_unit(gen, 3);
        auto uh = random_unit(gen, 3);
        // Near-equal utilities close to 0, where 1 - u collapses distinct values.
        if (t % 4 == 0) {
            for (std::size_t j = 0; j < 3; ++j) {
                ui[j] = tiny(gen);
                uh[j] = tiny(gen);
            }
        }
        const Score si = score(ui, ws);
        const Score sh = score(uh, ws);
        const double du = score_difference(si, sh);
        const double dl = score_difference(to_loss(si), to_loss(sh));
        const bool first_u = favours_first(du, Flavor::utility);
        const bool first_l = favours_first(dl, Flavor::loss);
        const bool second_u = favours_first(-du, Flavor::utility);
        const bool second_l = favours_first(-dl, Flavor::loss);
        if (first_u != first_l || second_u != second_l) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("score differences") {
    const double inf = std::numeric_limits<double>::infinity();
    const Score a{inf, Flavor::loss, Model::slos};
    const Score b{inf, Flavor::loss, Model::slos};
    const Score c{3.0, Flavor::loss, Model::slos};
    CHECK(score_difference(a, b) == 0.0);
    CHECK(std::isinf(score_difference(a, c)));
    CHECK(favours_first(score_difference(c, a), Flavor::loss));
    CHECK_FALSE(favours_first(score_difference(a, b), Flavor::loss));
    const Score u{0.5, Flavor::utility, Model::linear};
    CHECK_THROWS(score_difference(u, c));
    CHECK_THROWS(to_loss(c));
    CHECK(to_loss(u).value == 0.5);
}
