#ifndef MORSECONF_CONFIG_CELL_HPP
#define MORSECONF_CONFIG_CELL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "morseconf/permutation.hpp"
#include "morseconf/plane_tree.hpp"

namespace morseconf {

/// A vertex or a closed edge of the graph.  Vertices store a == b, edges
/// a < b in the vertex order.  Atoms are totally ordered with vertices
/// first (by index), then edges (tree edges by upper endpoint, matching
/// the e(v)-transfer of the vertex order).
struct Atom {
    int a = 0;
    int b = 0;

    static Atom vertex(int v) { return {v, v}; }
    static Atom edge(int u, int v) { return u < v ? Atom{u, v} : Atom{v, u}; }

    bool is_edge() const { return a != b; }
    bool covers(int v) const { return v == a || v == b; }  // closure membership
    bool disjoint_from(const Atom& o) const {
        return !(covers(o.a) || covers(o.b));
    }

    friend auto operator<=>(const Atom& x, const Atom& y) {
        // (is_edge, upper endpoint, lower endpoint)
        if (auto c = (x.a != x.b) <=> (y.a != y.b); c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        return x.a <=> y.a;
    }
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// An ordered n-tuple of atoms with pairwise disjoint closures; a cell of
/// the discretized configuration space.  Dimension = number of edge atoms.
struct ConfigCell {
    std::vector<Atom> entries;

    int n() const { return static_cast<int>(entries.size()); }
    int dim() const;
    bool valid() const;  // pairwise disjoint closures

    friend auto operator<=>(const ConfigCell&, const ConfigCell&) = default;
};

std::string to_string(const Atom& a);
std::string to_string(const ConfigCell& c);

/// All cells of D^n(G) of the given dimension, in lexicographic entry
/// order.  Throws BudgetExceeded when more than `budget` cells would be
/// produced.
std::vector<ConfigCell> enumerate_cells(const PlaneTree& tree, int n, int dim,
                                        long long budget = 1000000);

/// One representative per S_n-orbit: the cells whose entries are strictly
/// increasing in the atom order (the canonical sorted form).
std::vector<ConfigCell> orbit_representatives(const PlaneTree& tree, int n, int dim,
                                              long long budget = 1000000);

/// Canonical form of the S_n-orbit of `cell` (entries sorted).
ConfigCell to_unordered(const ConfigCell& cell);

/// Signed facets; the k-th edge entry (by position) contributes
/// (-1)^k (final - initial), final replacing the edge by its upper
/// endpoint.  Throws on 0-cells.
std::vector<std::pair<ConfigCell, int>> faces(const ConfigCell& cell);

/// Right action (x.sigma)_i = x_{sigma(i)}.
ConfigCell act(const ConfigCell& cell, const Permutation& sigma);

struct BudgetExceeded : std::runtime_error {
    long long count;
    explicit BudgetExceeded(long long c)
        : std::runtime_error("cell budget exceeded at " + std::to_string(c) + " cells"),
          count(c) {}
};

}  // namespace morseconf

#endif
