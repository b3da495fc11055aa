#ifndef MORSECONF_HOMOLOGY_HPP
#define MORSECONF_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "morseconf/config_cell.hpp"
#include "morseconf/plane_tree.hpp"

namespace morseconf {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix.
struct SparseMatrix {
    long long rows = 0;
    long long cols = 0;
    // entries[c] = sorted (row, coeff) pairs
    std::vector<std::vector<std::pair<long long, long long>>> entries;
};

struct ChainComplexMatrices {
    std::vector<long long> cell_counts;    // per dimension, 0..top
    std::vector<SparseMatrix> boundaries;  // boundaries[p-1] = boundary map from dim p
    long long euler() const;
};

/// Exact integer boundary matrices of D^n(tree), all dimensions that
/// carry cells (or up to `up_to_dim` when >= 0).  The composite of
/// consecutive boundaries is verified to vanish.  Throws BudgetExceeded
/// when a dimension has more than `budget` cells.
ChainComplexMatrices boundary_matrices(const PlaneTree& tree, int n,
                                       int up_to_dim = -1,
                                       long long budget = 1000000);

struct HomologyReport {
    std::map<int, long long> betti;
    std::map<int, std::vector<BigInt>> torsion;  // invariant factors != 1
    long long euler = 0;
};

/// Betti numbers (and invariant factors when `with_torsion`) via integer
/// Smith normal form with arbitrary-precision arithmetic.
HomologyReport smith_betti(const ChainComplexMatrices& matrices,
                           bool with_torsion = false);

struct SnfResult {
    long long rank = 0;
    std::vector<BigInt> invariant_factors;  // nonzero diagonal, divisibility chain
};

/// Smith normal form of a sparse integer matrix; pivot selection prefers
/// small magnitude, then low fill.
SnfResult smith_normal_form(const SparseMatrix& m, bool need_factors);

}  // namespace morseconf

#endif
