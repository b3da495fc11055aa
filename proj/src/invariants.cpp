#include "morseconf/invariants.hpp"

#include <stdexcept>

#include "morseconf/gradient_field.hpp"

namespace morseconf {

int k_dimension(const PlaneTree& tree, int n) {
    if (n < 1) throw std::invalid_argument("k_dimension: n >= 1 required");
    // chi = V - E; 1 for trees
    int chi = tree.vertex_count() - tree.edge_count();
    int half = (n + 1 - chi) / 2;
    int m = tree.essential_count();
    return std::min(half, m);
}

namespace {

bool is_y_like(const PlaneTree& tree) {
    // one essential vertex, of degree 3 (the radial degree-3 tree up to
    // subdivision)
    auto ess = tree.essential_vertices();
    return ess.size() == 1 && tree.degree(ess[0]) == 3;
}

}  // namespace

InvariantReport tc_table(const PlaneTree& tree, int n, int s_max) {
    if (n < 2) throw std::invalid_argument("tc_table: n >= 2 required");
    if (tree.essential_count() == 0)
        throw std::invalid_argument("tc_table: tree has no essential vertex");
    InvariantReport rep;
    rep.essential_count = tree.essential_count();
    int max_deg = 0;
    for (int v = 0; v < tree.vertex_count(); ++v)
        max_deg = std::max(max_deg, tree.degree(v));
    for (int r = 2; r < max_deg; ++r) rep.m[r] = m_r(tree, r);
    rep.k_n_g = k_dimension(tree, n);
    rep.ell = std::min(n / 2, rep.essential_count);
    rep.hdim = rep.ell;
    rep.cat = rep.ell;
    rep.y_graph_exception = (n == 2 && is_y_like(tree));
    for (int s = 1; s <= s_max; ++s) {
        if (s == 1)
            rep.tc[s] = rep.cat;
        else if (rep.y_graph_exception)
            rep.tc[s] = s - 1;
        else
            rep.tc[s] = s * rep.ell;
    }
    rep.betti1_predicted = wedge_circle_count(tree, n);
    return rep;
}

std::optional<long long> wedge_circle_count(const PlaneTree& tree, int n) {
    bool radial = tree.essential_count() == 1;
    if (!radial && n != 2 && n != 3) return std::nullopt;
    if (n == 2) return 2 * m_r(tree, 2) - 1;
    // radial trees and n = 3 share the same shape: 1 + n!(-1 + total/n!)
    // where total is the closed-form edge count of the Morse graph
    long long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    long long total = predicted_total_edges(tree, n);
    return 1 + (total - factorial);
}

long long euler_from_critical(const PlaneTree& tree, int n, long long budget) {
    long long chi = 0;
    int sign = 1;
    for (const auto& [dim, count] : count_critical(tree, n, budget)) {
        sign = (dim % 2 == 0) ? 1 : -1;
        chi += sign * count.ordered;
    }
    return chi;
}

}  // namespace morseconf
