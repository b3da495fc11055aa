#ifndef MORSECONF_TEST_HELPERS_HPP
#define MORSECONF_TEST_HELPERS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "morseconf/config_cell.hpp"
#include "morseconf/gradient_field.hpp"
#include "morseconf/permutation.hpp"
#include "morseconf/plane_tree.hpp"

namespace testutil {

using namespace morseconf;

// The radial tree with one vertex of the given degree (degree 3 = the Y).
inline std::string radial_tree(int degree) {
    std::string inner;
    for (int i = 0; i < degree - 1; ++i) inner += "()";
    return "((" + inner + "))";
}

inline std::string y_tree() { return radial_tree(3); }

// Caterpillar with m essential vertices, all of degree 3: a chain hanging
// off the root where every chain vertex carries one extra leaf and the
// last one carries two.
inline std::string chain_tree(int m) {
    std::string s = "(()())";
    for (int i = 1; i < m; ++i) s = "(" + s + "())";
    return "(" + s + ")";
}

inline long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline std::vector<Permutation> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Random plane tree with `essentials` essential vertices (chain skeleton,
// random degrees in [3, max_degree], leaves in random slots).
inline std::string random_tree(std::mt19937& rng, int essentials, int max_degree) {
    std::uniform_int_distribution<int> deg(3, max_degree);
    std::string sub;  // subtree rooted at the deepest essential vertex
    for (int i = essentials - 1; i >= 0; --i) {
        int d = deg(rng);
        int child_slots = d - 1;
        std::vector<std::string> kids(child_slots, "()");
        if (!sub.empty()) {
            std::uniform_int_distribution<int> slot(0, child_slots - 1);
            kids[slot(rng)] = sub;
        }
        sub = "(";
        for (const auto& k : kids) sub += k;
        sub += ")";
    }
    return "(" + sub + ")";
}

// Direct construction of the gradient field by the dimension-by-dimension
// induction: pair every cell that still has an unblocked vertex and was
// not consumed as an image one dimension below.  Serves as an independent
// oracle for build_field.
inline std::map<ConfigCell, ConfigCell> inductive_field(const PlaneTree& tree, int n,
                                                        int up_to_dim,
                                                        long long budget = 1000000) {
    std::map<ConfigCell, ConfigCell> W;
    std::set<ConfigCell> consumed;  // images of the previous stage
    for (int k = 0; k <= up_to_dim; ++k) {
        std::set<ConfigCell> next_consumed;
        for (const auto& cell : enumerate_cells(tree, n, k, budget)) {
            if (consumed.count(cell)) continue;
            auto up = principal_reduction(tree, cell);
            if (!up) continue;
            W.emplace(cell, *up);
            next_consumed.insert(*up);
        }
        consumed = std::move(next_consumed);
    }
    return W;
}

// Exhaustive oracle for enumerate_cells on tiny trees: filter the full
// n-fold product of atoms by pairwise disjointness.
inline std::set<ConfigCell> brute_force_cells(const PlaneTree& tree, int n, int dim) {
    std::vector<Atom> atoms;
    for (int v = 0; v < tree.vertex_count(); ++v) atoms.push_back(Atom::vertex(v));
    for (int v = 1; v < tree.vertex_count(); ++v)
        atoms.push_back(Atom::edge(tree.parent(v), v));
    for (auto [u, v] : tree.deleted_edges()) atoms.push_back(Atom::edge(u, v));

    std::set<ConfigCell> out;
    std::vector<int> pick(n, 0);
    while (true) {
        ConfigCell cell;
        for (int i = 0; i < n; ++i) cell.entries.push_back(atoms[pick[i]]);
        if (cell.dim() == dim && cell.valid()) out.insert(cell);
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(atoms.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return out;
}

}  // namespace testutil

#endif
