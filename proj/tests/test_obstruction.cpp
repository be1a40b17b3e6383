#include <doctest.h>

#include "borelss/classify.hpp"
#include "borelss/errors.hpp"
#include "borelss/obstruction.hpp"

using namespace borelss;

TEST_CASE("index of the both-even ring is 3n") {
    for (int n = 1; n <= 8; ++n) {
        const auto report = classify(make_type_ab(n, Parity::Even, Parity::Even), Group::Z2);
        REQUIRE(report.outcomes.size() == 1);
        const auto& pres = report.outcomes[0].presentation;
        CHECK(cohomology_index(pres) == 3 * n);
        CHECK(cohomology_index_by_basis(pres) == 3 * n);
        const auto result = make_index_result(pres);
        CHECK(sphere_map_bound(result) == 3 * n);
        CHECK(result.no_equivariant_map_above == result.cohomology_index);
    }
}

TEST_CASE("index edge cases") {
    const auto x_dead = RingPresentation::parse({{"x", 1, std::nullopt}}, {"x"});
    CHECK(cohomology_index(x_dead) == 0);
    CHECK(sphere_map_bound(make_index_result(x_dead)) == 0);

    const auto no_x = RingPresentation::parse({{"z", 2, std::nullopt}}, {"z^2"});
    CHECK(cohomology_index(no_x) == 0);

    const auto circle = RingPresentation::parse({{"x", 2, std::nullopt}, {"z", 1, std::nullopt}}, {"x^2", "z^2"});
    CHECK_THROWS_AS(cohomology_index(circle), WrongGroup);
}

TEST_CASE("both-odd outcomes at n = 2 have index 2") {
    const auto summary = index_summary(classify(make_type_ab(2, Parity::Odd, Parity::Odd), Group::Z2));
    CHECK(summary.per_outcome == std::vector<int>{2});
    CHECK(summary.bound == 2);
    CHECK(summary.status == "candidate");
}

TEST_CASE("index summaries") {
    const auto none = index_summary(classify(make_type_ab(2, Parity::Odd, Parity::Even), Group::Z2));
    CHECK(none.per_outcome.empty());
    CHECK(none.bound == -1);

    const auto even_odd = index_summary(classify(make_type_ab(2, Parity::Even, Parity::Odd), Group::Z2));
    CHECK(even_odd.status == "candidate");
    CHECK(even_odd.bound == 6);

    const auto circle = classify(make_type_ab(1, Parity::Even, Parity::Even), Group::Circle);
    CHECK_THROWS_AS(index_summary(circle), WrongGroup);
}
