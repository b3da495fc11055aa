#ifndef MORSECONF_MORSE_GRAPH_HPP
#define MORSECONF_MORSE_GRAPH_HPP

#include <string>
#include <vector>

#include "morseconf/config_cell.hpp"
#include "morseconf/permutation.hpp"
#include "morseconf/plane_tree.hpp"

namespace morseconf {

/// Follow the unique gradient path from a 0-cell down to a critical
/// 0-cell and return it as a permutation (sigma(i) = a_i + 1).
Permutation gradient_terminal(const PlaneTree& tree, ConfigCell zero_cell);

struct MorseEdge {
    Permutation source;  // terminal of the initial face (lower endpoint side)
    Permutation target;  // terminal of the final face
    int level_i = 0;     // edge belongs to sublevel E_{level_i, level_j}
    int level_j = 0;
    ConfigCell cell;     // the critical 1-cell this edge came from
};

struct MorseGraph {
    int n = 0;
    std::vector<MorseEdge> edges;  // vertices are all n! permutations
};

/// Sublevel (i, j) of a critical 1-cell, read off the canonical ordered
/// representative (edge first, other entries increasing): i = n minus the
/// size of the stack of vertices piled on the root, j - 1 = number of
/// non-stack vertices between the edge's endpoints.
std::pair<int, int> sublevel_of(const PlaneTree& tree, const ConfigCell& critical_1cell);

/// One Morse edge per critical 1-cell, endpoints via gradient_terminal,
/// oriented initial -> final face.  Every edge is cross-checked against
/// the algebraic identity target = sublevel_cycle(i,j)^{-1} * source; a
/// mismatch throws.  Trees only.
MorseGraph build_morse_graph(const PlaneTree& tree, int n, long long budget = 1000000);

struct StructureReport {
    bool ok = true;
    long long total_edges = 0;
    long long predicted_total = 0;
    std::vector<std::string> mismatches;
};

/// Checks the full sublevel structure: per-pair multiplicities, orbit
/// cycle decompositions (n!/j disjoint j-cycles), edge equivariance,
/// the closed-form edge total, and that parallel edges share a sublevel.
StructureReport verify_structure(const MorseGraph& graph, const PlaneTree& tree, int n);

std::string to_dot(const MorseGraph& graph);

}  // namespace morseconf

#endif
