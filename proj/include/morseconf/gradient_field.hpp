#ifndef MORSECONF_GRADIENT_FIELD_HPP
#define MORSECONF_GRADIENT_FIELD_HPP

#include <map>
#include <optional>
#include <vector>

#include "morseconf/config_cell.hpp"
#include "morseconf/plane_tree.hpp"

namespace morseconf {

enum class CellType { Critical, Redundant, Collapsible };

struct CellClass {
    CellType type;
    /// Redundant: entry index of the minimal unblocked vertex.
    /// Collapsible: entry index of the minimal order-respecting edge.
    /// Critical: -1.
    int pair_index = -1;
};

/// True iff entry i (a vertex) is blocked: the closure of e(a_i) meets the
/// closure of another entry.  The root is always blocked (e(0) undefined).
/// Throws if entry i is an edge.
bool is_blocked(const PlaneTree& tree, const ConfigCell& cell, int i);

/// Replace the minimal unblocked vertex by its root-direction edge;
/// nullopt when every vertex is blocked.
std::optional<ConfigCell> principal_reduction(const PlaneTree& tree,
                                              const ConfigCell& cell);
int minimal_unblocked_index(const PlaneTree& tree, const ConfigCell& cell);  // -1 if none

/// True iff the tree edge at entry i is order-respecting in the cell:
/// every other entry-vertex adjacent to its lower endpoint a is < a or
/// > the upper endpoint.  Deleted edges are never order-respecting.
bool is_order_respecting(const PlaneTree& tree, const ConfigCell& cell, int i);
int minimal_order_respecting_index(const PlaneTree& tree, const ConfigCell& cell);

/// Trichotomy per the classification of cells: critical / collapsible /
/// redundant, decided entry-locally.
CellClass classify(const PlaneTree& tree, const ConfigCell& cell);

/// Pairing redundant cell -> its cofacet under principal reduction.
struct GradientField {
    std::map<ConfigCell, ConfigCell> pairs;
};

/// Pairs for every redundant cell of dimension <= up_to_dim.
GradientField build_field(const PlaneTree& tree, int n, int up_to_dim,
                          long long budget = 1000000);

struct AcyclicityResult {
    bool acyclic = true;
    std::vector<ConfigCell> cycle;  // witness when not acyclic
};

/// Searches for closed W-paths among the redundant dim-cells appearing as
/// keys of `field`.
AcyclicityResult check_acyclic(const GradientField& field, int dim);

struct CriticalCount {
    long long ordered = 0;
    long long unordered = 0;
};

/// Critical-cell counts per dimension, ordered and unordered.
std::map<int, CriticalCount> count_critical(const PlaneTree& tree, int n,
                                            long long budget = 1000000);

/// Cell-type counts of one dimension (for the classification report).
struct ClassTally {
    long long critical = 0;
    long long redundant = 0;
    long long collapsible = 0;
    long long total() const { return critical + redundant + collapsible; }
};
ClassTally tally_classes(const PlaneTree& tree, int n, int dim,
                         long long budget = 1000000);

}  // namespace morseconf

#endif
