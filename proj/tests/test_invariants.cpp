#include <doctest.h>

#include "helpers.hpp"
#include "morseconf/invariants.hpp"
#include "morseconf/morse_graph.hpp"

using namespace morseconf;
using namespace testutil;

TEST_SUITE_BEGIN("invariants");

TEST_CASE("critical-dimension bound") {
    CHECK(k_dimension(PlaneTree::parse(y_tree()), 2) == 1);
    CHECK(k_dimension(PlaneTree::parse(chain_tree(2)), 5) == 2);
    CHECK(k_dimension(PlaneTree::parse(chain_tree(3)), 4) == 2);  // n/2 binds
    CHECK(k_dimension(PlaneTree::parse(y_tree()), 1) == 0);
}

TEST_CASE("the one exceptional case: two particles on the Y") {
    InvariantReport rep = tc_table(PlaneTree::parse(y_tree()), 2, 3);
    CHECK(rep.y_graph_exception);
    CHECK(rep.ell == 1);
    CHECK(rep.cat == 1);
    CHECK(rep.hdim == 1);
    CHECK(rep.tc.at(1) == 1);
    CHECK(rep.tc.at(2) == 1);  // s - 1
    CHECK(rep.tc.at(3) == 2);
    // a longer radial degree-3 tree is still a subdivided Y
    InvariantReport rep2 = tc_table(PlaneTree::parse(y_tree()).subdivided_for(4), 2, 2);
    CHECK(rep2.y_graph_exception);
    CHECK(rep2.tc.at(2) == 1);
}

TEST_CASE("generic trees: TC_s = s * ell") {
    InvariantReport rep = tc_table(PlaneTree::parse(chain_tree(2)), 4, 5);
    CHECK_FALSE(rep.y_graph_exception);
    CHECK(rep.ell == 2);
    CHECK(rep.cat == 2);
    CHECK(rep.tc.at(2) == 4);
    CHECK(rep.tc.at(5) == 10);
    // minimum rule: three essential vertices but only four particles
    InvariantReport rep3 = tc_table(PlaneTree::parse(chain_tree(3)), 4, 2);
    CHECK(rep3.ell == 2);
    CHECK(rep3.tc.at(2) == 4);
    // degree-4 radial tree with two particles is not exceptional
    InvariantReport rep4 = tc_table(PlaneTree::parse(radial_tree(4)), 2, 2);
    CHECK_FALSE(rep4.y_graph_exception);
    CHECK(rep4.tc.at(2) == 2);
}

TEST_CASE("TC increments are constant in s") {
    for (const auto& [s, n] : std::vector<std::pair<std::string, int>>{
             {y_tree(), 2}, {y_tree(), 4}, {chain_tree(2), 4}, {radial_tree(5), 6}}) {
        InvariantReport rep = tc_table(PlaneTree::parse(s), n, 6);
        int step = rep.y_graph_exception ? 1 : rep.ell;
        for (int k = 2; k < 6; ++k) CHECK(rep.tc.at(k + 1) - rep.tc.at(k) == step);
    }
}

TEST_CASE("wedge-of-circles counts") {
    CHECK(wedge_circle_count(PlaneTree::parse(radial_tree(3)), 2) == 1);
    // two particles: 2 m_2 - 1 circles
    for (const std::string& s : {y_tree(), radial_tree(4), chain_tree(2), chain_tree(3)}) {
        PlaneTree t = PlaneTree::parse(s);
        CHECK(wedge_circle_count(t, 2) == 2 * m_r(t, 2) - 1);
    }
    // three particles on the Y: 13 circles, equal to the cycle rank of the
    // Morse graph
    PlaneTree y3 = PlaneTree::parse(y_tree()).subdivided_for(3);
    CHECK(wedge_circle_count(y3, 3) == 13);
    MorseGraph g = build_morse_graph(y3, 3);
    CHECK(*wedge_circle_count(y3, 3) ==
          static_cast<long long>(g.edges.size()) - factorial(3) + 1);
    // radial trees stay wedges for any n
    CHECK(wedge_circle_count(PlaneTree::parse(radial_tree(4)), 4).has_value());
    // two essential vertices with four particles: not a wedge formula case
    CHECK_FALSE(wedge_circle_count(PlaneTree::parse(chain_tree(2)), 4).has_value());
}

TEST_CASE("Euler characteristic from critical counts") {
    CHECK(euler_from_critical(PlaneTree::parse(y_tree()).subdivided_for(2), 2) == 0);
    CHECK(euler_from_critical(PlaneTree::parse(y_tree()).subdivided_for(3), 3) == -12);
    // one particle: the whole tree collapses to a point
    CHECK(euler_from_critical(PlaneTree::parse(chain_tree(2)).subdivided_for(2), 1) == 1);
}

TEST_SUITE_END();
