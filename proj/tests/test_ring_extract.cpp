#include <doctest.h>

#include "borelss/classify.hpp"
#include "borelss/errors.hpp"
#include "borelss/ring_extract.hpp"

using namespace borelss;

namespace {

RingPresentation expected_ring(int x_power, int n, int zx_power, int x_degree) {
    std::vector<std::string> rels{"x^" + std::to_string(x_power), "z^2"};
    if (zx_power > 0)
        rels.push_back("z*x^" + std::to_string(zx_power));
    return RingPresentation::parse({{"x", x_degree, std::nullopt}, {"z", n, std::nullopt}}, rels);
}

Outcome only_outcome(const ClassificationReport& report) {
    REQUIRE(report.outcomes.size() == 1);
    return report.outcomes.front();
}

}  // namespace

TEST_CASE("parse and render") {
    const auto p = RingPresentation::parse({{"z", 2, std::nullopt}, {"x", 1, std::nullopt}}, {"x^3*z", "z^2", "x^7"});
    REQUIRE(p.generators().size() == 2);
    CHECK(p.generators()[0].name == "x");
    CHECK(p.to_string() == "F2[x,z]/(z^2, x^3*z, x^7); deg x = 1, deg z = 2");
    CHECK(p.relation_strings() == std::vector<std::string>{"z^2", "x^3*z", "x^7"});
    CHECK_THROWS_AS(RingPresentation::parse({{"x", 0, std::nullopt}}, {}), InvalidInput);
    CHECK_THROWS_AS(RingPresentation::parse({{"x", 1, std::nullopt}, {"z", 2, std::nullopt}}, {"x + z"}), InvalidInput);
    CHECK_THROWS_AS(RingPresentation::parse({{"x", 1, std::nullopt}}, {"y^2"}), InvalidInput);
}

TEST_CASE("tot_poincare of the both-even Z/2 branch") {
    const auto o = only_outcome(classify(make_type_ab(2, Parity::Even, Parity::Even), Group::Z2));
    CHECK(tot_poincare(o.e_infinity) == std::map<int, int>{{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}});
    CHECK(o.poincare == tot_poincare(o.e_infinity));
}

TEST_CASE("tot_poincare of the circle both-even branch, n = 3") {
    const auto o = only_outcome(classify(make_type_ab(3, Parity::Even, Parity::Even), Group::Circle));
    std::map<int, int> expected;
    for (int j : {0, 2, 3, 4, 5, 6, 8})
        expected[j] = 1;
    CHECK(tot_poincare(o.e_infinity) == expected);
}

TEST_CASE("tot_poincare of an empty page") {
    Page page = build_e2(make_type_ab(1, Parity::Even, Parity::Even), Group::Z2);
    for (auto& [l, row] : page.rows)
        row.module = IntervalModule(1, {});
    CHECK(tot_poincare(page).empty());
}

TEST_CASE("presentation of the both-even Z/2 branch") {
    for (int n = 1; n <= 5; ++n) {
        const auto o = only_outcome(classify(make_type_ab(n, Parity::Even, Parity::Even), Group::Z2));
        CHECK(same_presentation(o.presentation, expected_ring(3 * n + 1, n, n + 1, 1)));
        const auto z = o.presentation.find("z");
        REQUIRE(z.has_value());
        CHECK(o.presentation.generators()[*z].edge_image == std::optional<std::string>("v1"));

        bool z_squared = false;
        for (const auto& f : o.extension_flags) {
            if (f.product != "z^2")
                continue;
            z_squared = true;
            const std::string xn = n == 1 ? "x" : "x^" + std::to_string(n);
            const std::vector<std::string> expected{xn + "*z", "x^" + std::to_string(2 * n)};
            CHECK(f.candidates == expected);
        }
        CHECK(z_squared);
    }
}

TEST_CASE("presentations of the circle branches") {
    for (int n : {1, 3, 5}) {
        const auto report = classify(make_type_ab(n, Parity::Even, Parity::Odd), Group::Circle);
        REQUIRE(report.outcomes.size() == 2);
        const auto first_ring = expected_ring((3 * n + 1) / 2, n, (n + 1) / 2, 2);
        const auto second_ring = n == 1 ? RingPresentation::parse({{"z", 2, std::nullopt}}, {"z^2"})
                                    : expected_ring((n + 1) / 2, 2 * n, 0, 2);
        CHECK(same_presentation(report.outcomes[0].presentation, first_ring));
        CHECK(same_presentation(report.outcomes[1].presentation, second_ring));
        CHECK_FALSE(same_presentation(first_ring, second_ring));
    }
}

TEST_CASE("same_presentation") {
    const auto a = expected_ring(7, 2, 3, 1);
    const auto swapped = RingPresentation::parse({{"z", 2, std::nullopt}, {"x", 1, std::nullopt}}, {"z*x^3", "x^7", "z^2"});
    CHECK(same_presentation(a, swapped));
    const auto renamed = RingPresentation::parse({{"y", 1, std::nullopt}, {"w", 2, std::nullopt}}, {"y^7", "w^2", "w*y^3"});
    CHECK(same_presentation(a, renamed));
    CHECK_FALSE(same_presentation(a, expected_ring(7, 2, 4, 1)));

    // Two generators of equal degree may be exchanged.
    const auto p = RingPresentation::parse({{"a", 1, std::nullopt}, {"b", 1, std::nullopt}}, {"a^2", "b^3", "a*b"});
    const auto q = RingPresentation::parse({{"a", 1, std::nullopt}, {"b", 1, std::nullopt}}, {"b^2", "a^3", "a*b"});
    CHECK(same_presentation(p, q));
}

TEST_CASE("presented_poincare counts standard monomials") {
    const auto ring = expected_ring(7, 2, 3, 1);
    CHECK(presented_poincare(ring, 10) == std::map<int, int>{{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}});
    const auto sum = RingPresentation::parse({{"a", 1, std::nullopt}, {"b", 1, std::nullopt}}, {"a^2 + b^2", "a*b"});
    // Basis 1; a, b; a^2 = b^2; nothing in degree 3.
    CHECK(presented_poincare(sum, 5) == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
    CHECK(in_ideal(sum, {3, 0}));
    CHECK_FALSE(in_ideal(sum, {2, 0}));
}

TEST_CASE("presented dimensions equal tot_poincare for every outcome") {
    for (int n = 1; n <= 4; ++n)
        for (Group g : {Group::Z2, Group::Circle})
            for (Parity a : {Parity::Even, Parity::Odd})
                for (Parity b : {Parity::Even, Parity::Odd})
                    for (const auto& o : classify(make_type_ab(n, a, b), g).outcomes)
                        CHECK(presented_poincare(o.presentation, 6 * n + 4) == tot_poincare(o.e_infinity));
}
