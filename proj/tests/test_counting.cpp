#include <doctest.h>

#include "helpers.hpp"
#include "morseconf/counting.hpp"

using namespace morseconf;
using namespace testutil;

TEST_SUITE_BEGIN("counting");

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(52, 26) == 495918532948104LL);
}

TEST_CASE("branching weights m_r") {
    PlaneTree y = PlaneTree::parse(y_tree());
    CHECK(m_r(y, 2) == 1);
    CHECK(m_r(y, 3) == 0);
    PlaneTree r5 = PlaneTree::parse(radial_tree(5));
    CHECK(m_r(r5, 2) == 6);   // C(4,2)
    CHECK(m_r(r5, 3) == 4);   // C(4,3)
    CHECK(m_r(r5, 4) == 1);
    CHECK(m_r(r5, 5) == 0);   // above max degree - 1
    // invariant under subdivision
    CHECK(m_r(r5.subdivided_for(4), 3) == 4);
    PlaneTree c3 = PlaneTree::parse(chain_tree(3));
    CHECK(m_r(c3, 2) == 3);
}

TEST_CASE("two-particle census is a single row") {
    PlaneTree t = PlaneTree::parse(chain_tree(2));
    CensusTable table = census(t, 2);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].i == 2);
    CHECK(table.rows[0].j == 2);
    CHECK(table.rows[0].multiplicity == m_r(t, 2));
    CHECK(table.total == 2 * m_r(t, 2));
}

TEST_CASE("census totals match the closed-form sum") {
    for (const std::string& s : {y_tree(), radial_tree(4), chain_tree(2)}) {
        PlaneTree t = PlaneTree::parse(s);
        for (int n = 2; n <= 5; ++n) {
            CensusTable table = census(t, n);
            long long sum = 0;
            for (const auto& r : table.rows) {
                CHECK(r.edges == factorial(n) * r.multiplicity);
                CHECK(r.cycles_per_orbit == factorial(n) / r.j);
                sum += r.edges;
            }
            CHECK(sum == table.total);
            CHECK(table.total == predicted_total_edges(t, n));
        }
    }
}

TEST_CASE("prefix-splittable compositions: brute force vs closed form") {
    CHECK(count_balls(4, 6, 3) == 4);
    CHECK(count_balls_closed(4, 6, 3) == 4);  // C(4,1)
    for (int r = 3; r <= 8; ++r) CHECK(count_balls(1, r, 2) == 1);
    // independence of the split point
    for (int r = 4; r <= 9; ++r)
        for (int s = 2; s <= r; ++s)
            for (int f = 1; f < r; ++f)
                CHECK(count_balls(f, r, s) == count_balls(1, r, s));
    CHECK(vandermonde_selfcheck(10));
}

TEST_SUITE_END();
