#ifndef MORSECONF_COUNTING_HPP
#define MORSECONF_COUNTING_HPP

#include <vector>

#include "morseconf/plane_tree.hpp"

namespace morseconf {

/// Exact binomial, 0 when k < 0 or k > n.  Evaluated multiplicatively;
/// throws on overflow of long long (far beyond anything used here).
long long binomial(int n, int k);

/// m_r(T) = sum over vertices with d(v) > r of C(d(v)-1, r).
long long m_r(const PlaneTree& tree, int r);

/// Repeated-edge multiplicity of sublevel E_{i,j}:
/// sum_{l=2}^{i} C(i-2, l-2) m_l.  Independent of j.
long long predicted_multiplicity(int i, int j, const PlaneTree& tree);

/// Total Morse-graph edge count n! * sum_{2<=l<=i<=n} (i-1) C(i-2,l-2) m_l.
long long predicted_total_edges(const PlaneTree& tree, int n);

struct CensusRow {
    int i = 0;
    int j = 0;
    long long multiplicity = 0;   // repeated edges between an endpoint pair
    long long orbits = 0;         // S_n-orbits of edges in E_{i,j}
    long long cycles_per_orbit = 0;  // n!/j
    long long edges = 0;          // n! * multiplicity
};

struct CensusTable {
    std::vector<CensusRow> rows;
    long long total = 0;
};

/// Predicted sublevel table for all 2 <= j <= i <= n.
CensusTable census(const PlaneTree& tree, int n);

/// Brute force over compositions of r into s positive parts: number with
/// some prefix summing to f.
long long count_balls(int f, int r, int s);
/// Closed form C(r-2, s-2).
long long count_balls_closed(int f, int r, int s);

/// Exhaustive agreement of count_balls with its closed form for all valid
/// (f, r, s) with r <= r_max, plus the stars-and-bars count of
/// compositions against C(r-1, s-1).
bool vandermonde_selfcheck(int r_max);

}  // namespace morseconf

#endif
