#include "doctest.h"

#include "brmcda/case_study.hpp"

using namespace brmcda;

TEST_CASE("embedded trial counts") {
    const Dataset d = case_study::dataset();
    REQUIRE(d.arms.size() == 3);
    REQUIRE(d.criteria.size() == 4);
    CHECK(d.arms[0].name == "Venlafaxine");
    CHECK(d.arms[0].outcomes[0].events == 51);
    CHECK(d.arms[0].outcomes[0].patients == 96);
    CHECK(d.arms[1].outcomes[1].events == 22);
    CHECK(d.arms[1].outcomes[1].patients == 102);
    CHECK(d.arms[2].outcomes[3].events == 1);
    CHECK(d.criteria[0].kind == CriterionKind::benefit);
    CHECK(d.criteria[0].most_preferable == 0.8);
    CHECK(d.criteria[0].least_preferable == 0.2);
    for (std::size_t j = 1; j < 4; ++j) {
        CHECK(d.criteria[j].kind == CriterionKind::risk);
        CHECK(d.criteria[j].least_preferable == 0.5);
    }
    CHECK_NOTHROW(d.validate());
}

TEST_CASE("weight scenarios") {
    CHECK(case_study::scenario(2).linear_weights[0] == 0.58);
    CHECK(case_study::scenario(3).linear_weights[3] == 0.29);
    CHECK_THROWS(case_study::scenario(0));
    CHECK_THROWS(case_study::scenario(4));
    for (const auto& s : case_study::scenarios())
        CHECK_NOTHROW(case_study::with_scenario(case_study::dataset(), s).validate());
}

TEST_CASE("scenario 1 Fluoxetine vs Placebo under linear and SLoS") {
    const auto lin = case_study::run(case_study::scenario(1), Model::linear);
    const auto slos = case_study::run(case_study::scenario(1), Model::slos);
    CHECK(lin.comparisons[2].result.probability == doctest::Approx(0.072).epsilon(0.015 / 0.072));
    CHECK(slos.comparisons[2].result.probability == doctest::Approx(0.473).epsilon(0.015 / 0.473));
}

TEST_CASE("probability table agrees with single runs on shared draws") {
    const auto cells = case_study::probability_table(20000, 0.8, 5, 0.2);
    REQUIRE(cells.size() == 36);
    const auto r = case_study::run(case_study::scenario(3), Model::product, 20000, 0.8, 5, 0.2);
    int matched = 0;
    for (const auto& c : cells)
        if (c.scenario == 3 && c.model == Model::product) {
            CHECK(c.probability == r.comparisons[matched].result.probability);
            ++matched;
        }
    CHECK(matched == 3);
}

TEST_CASE("Fluoxetine vs Placebo ordering across models in scenarios 1 and 3") {
    const auto cells = case_study::probability_table(100000, 0.8, kDefaultSeed, 0.2);
    for (int s : {1, 3}) {
        double p[4] = {};
        for (const auto& c : cells)
            if (c.scenario == s && c.first == 1 && c.second == 2)
                p[static_cast<int>(c.model)] = c.probability;
        INFO("scenario " << s);
        CHECK(p[0] < p[2]);  // linear < multilinear
        CHECK(p[2] < p[1]);  // multilinear < product
        CHECK(p[1] < p[3]);  // product < SLoS
    }
}
