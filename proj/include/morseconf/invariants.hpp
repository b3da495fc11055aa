#ifndef MORSECONF_INVARIANTS_HPP
#define MORSECONF_INVARIANTS_HPP

#include <map>
#include <optional>

#include "morseconf/counting.hpp"
#include "morseconf/plane_tree.hpp"

namespace morseconf {

/// Upper bound for the dimension of critical cells:
/// min{ floor((n+1-chi)/2), #essential }, which for trees is
/// min{ floor(n/2), #essential }.
int k_dimension(const PlaneTree& tree, int n);

struct InvariantReport {
    std::map<int, long long> m;     // m_r for r = 2 .. max degree - 1
    int essential_count = 0;
    int k_n_g = 0;
    int ell = 0;                    // min{ floor(n/2), essential_count }
    int hdim = 0;                   // = ell
    int cat = 0;                    // = ell
    std::map<int, int> tc;          // s -> TC_s, s = 1 .. s_max
    bool y_graph_exception = false; // radial degree-3 tree with n = 2
    std::optional<long long> betti1_predicted;  // wedge-of-circles count
    long long euler_from_critical = 0;
};

/// Closed-form invariant table.  TC_s = s * ell except the one radial
/// degree-3, two-particle case where TC_s = s - 1 (s >= 2); TC_1 = cat.
/// Requires n >= 2 and at least one essential vertex.
InvariantReport tc_table(const PlaneTree& tree, int n, int s_max);

/// Number of circles when the model is known to be a wedge of circles:
/// radial trees (one essential vertex), n = 2, or n = 3.  nullopt
/// otherwise.
std::optional<long long> wedge_circle_count(const PlaneTree& tree, int n);

/// Alternating sum of ordered critical-cell counts over dimensions.
long long euler_from_critical(const PlaneTree& tree, int n, long long budget = 1000000);

}  // namespace morseconf

#endif
