#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "morseconf/plane_tree.hpp"

using namespace morseconf;
using namespace testutil;

TEST_SUITE_BEGIN("tree");

TEST_CASE("parse: Y graph rooted at a leaf") {
    PlaneTree t = PlaneTree::parse("((()()))");
    CHECK(t.vertex_count() == 4);
    CHECK(t.root() == 0);
    CHECK(t.parent(1) == 0);
    CHECK(t.parent(2) == 1);
    CHECK(t.parent(3) == 1);
    CHECK(t.degree(0) == 1);
    CHECK(t.degree(1) == 3);
    CHECK(t.degree(2) == 1);
    CHECK(t.essential_count() == 1);
    CHECK(t.essential_vertices() == std::vector<int>{1});
}

TEST_CASE("parse: single edge") {
    PlaneTree t = PlaneTree::parse("(())");
    CHECK(t.vertex_count() == 2);
    CHECK(t.essential_count() == 0);
}

TEST_CASE("parse: two essential vertices, hand-checked numbering") {
    // A root of degree two is rejected; the intended tree needs a pendant
    // root attached first.
    CHECK_THROWS_AS(PlaneTree::parse("((()())(()()))"), std::invalid_argument);
    PlaneTree t = PlaneTree::parse(PlaneTree::attach_pendant_root("((()())(()()))"));
    CHECK(t.vertex_count() == 8);
    CHECK(t.degree(1) == 3);  // children: the 2-subtree and the 5-subtree
    CHECK(t.children(1) == std::vector<int>{2, 5});
    CHECK(t.children(2) == std::vector<int>{3, 4});
    CHECK(t.children(5) == std::vector<int>{6, 7});
    CHECK(t.essential_count() == 3);  // 1, 2 and 5
}

TEST_CASE("parse: malformed input") {
    CHECK_THROWS_AS(PlaneTree::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PlaneTree::parse("(()"), std::invalid_argument);
    CHECK_THROWS_AS(PlaneTree::parse("())("), std::invalid_argument);
    CHECK_THROWS_AS(PlaneTree::parse("()()"), std::invalid_argument);
    CHECK_THROWS_AS(PlaneTree::parse("()"), std::invalid_argument);  // root, no child
}

TEST_CASE("edge labels g") {
    PlaneTree t = PlaneTree::parse(y_tree());
    for (int v = 0; v < t.vertex_count(); ++v) CHECK(t.g(v, v) == 0);
    CHECK(t.g(1, 0) == 0);  // toward the root
    CHECK(t.g(1, 2) == 1);
    CHECK(t.g(1, 3) == 2);
    CHECK(t.g(0, 1) == 1);  // the root's single edge carries label 1
    CHECK(t.g(2, 3) == 0);  // path from 2 starts toward the root
}

TEST_CASE("g is a bijection onto 0..d(v)-1 at each vertex") {
    PlaneTree t = PlaneTree::parse(chain_tree(2)).subdivided_for(3);
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::set<int> labels;
        for (int w : t.neighbors(v)) labels.insert(t.g(v, w));
        CHECK(static_cast<int>(labels.size()) == t.degree(v));
        CHECK(*labels.begin() == (v == 0 ? 1 : 0));
        CHECK(*labels.rbegin() == (v == 0 ? 1 : t.degree(v) - 1));
    }
}

TEST_CASE("meet") {
    PlaneTree t = PlaneTree::parse(y_tree());
    for (int v = 0; v < 4; ++v) {
        CHECK(t.meet(v, v) == v);
        CHECK(t.meet(0, v) == 0);
        CHECK(t.meet(v, 0) == 0);
    }
    CHECK(t.meet(2, 3) == 1);
    CHECK(t.meet(3, 2) == 1);
}

TEST_CASE("vertex order from g and meet agrees with index order") {
    for (const std::string& s :
         {y_tree(), radial_tree(5), chain_tree(3), std::string("(())")}) {
        PlaneTree t = PlaneTree::parse(s).subdivided_for(3);
        for (int u = 0; u < t.vertex_count(); ++u)
            for (int v = 0; v < t.vertex_count(); ++v)
                if (u != v) CHECK(t.vertex_less(u, v) == (u < v));
    }
}

TEST_CASE("root paths are monotone in the vertex order") {
    PlaneTree t = PlaneTree::parse(chain_tree(3)).subdivided_for(4);
    for (int v = 1; v < t.vertex_count(); ++v)
        for (int w = v; w != -1; w = t.parent(w)) CHECK(w <= v);
}

TEST_CASE("root-direction edge e(v)") {
    PlaneTree t = PlaneTree::parse(y_tree());
    CHECK(t.root_edge(1) == std::pair<int, int>{0, 1});
    CHECK(t.root_edge(3) == std::pair<int, int>{1, 3});
    CHECK_THROWS_AS(t.root_edge(0), std::invalid_argument);
}

TEST_CASE("subdivision: Y for two particles is already fine") {
    PlaneTree t = PlaneTree::parse(y_tree());
    CHECK(t.sufficiently_subdivided(2));
    CHECK(t.subdivided_for(2).to_parenthesis() == t.to_parenthesis());
}

TEST_CASE("subdivision: Y for three particles splits each edge once") {
    PlaneTree t = PlaneTree::parse(y_tree());
    CHECK_FALSE(t.sufficiently_subdivided(3));
    PlaneTree s = t.subdivided_for(3);
    CHECK(s.vertex_count() == 7);
    CHECK(s.sufficiently_subdivided(3));
    CHECK(s.essential_count() == 1);
    // idempotent once sufficient
    CHECK(s.subdivided_for(3).to_parenthesis() == s.to_parenthesis());
}

TEST_CASE("subdivision: single edge for two particles unchanged") {
    PlaneTree t = PlaneTree::parse("(())");
    CHECK(t.sufficiently_subdivided(2));
    CHECK(t.subdivided_for(2).vertex_count() == 2);
}

TEST_CASE("subdivision output is always sufficient and minimal per segment") {
    for (const std::string& s : {y_tree(), radial_tree(4), chain_tree(2), chain_tree(3)}) {
        for (int n = 2; n <= 5; ++n) {
            PlaneTree t = PlaneTree::parse(s);
            PlaneTree sub = t.subdivided_for(n);
            CHECK(sub.sufficiently_subdivided(n));
            CHECK(sub.essential_count() == t.essential_count());
            CHECK(sub.subdivided_for(n).vertex_count() == sub.vertex_count());
        }
    }
}

TEST_CASE("deleted edges enter degrees and adjacency") {
    PlaneTree t = PlaneTree::parse(chain_tree(2));
    int a = 2, b = t.vertex_count() - 1;
    t.add_deleted_edge(a, b);
    CHECK(t.degree(a) == 4);
    CHECK(t.adjacent(a, b));
    CHECK(t.edge_count() == t.vertex_count());
    CHECK_THROWS_AS(t.subdivided_for(3), std::invalid_argument);
}

TEST_SUITE_END();
