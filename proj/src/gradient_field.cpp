#include "morseconf/gradient_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace morseconf {

bool is_blocked(const PlaneTree& tree, const ConfigCell& cell, int i) {
    const Atom& at = cell.entries[i];
    if (at.is_edge())
        throw std::invalid_argument("is_blocked: entry is an edge");
    int v = at.a;
    if (v == tree.root()) return true;  // e(0) undefined
    int p = tree.parent(v);
    for (int j = 0; j < cell.n(); ++j)
        if (j != i && cell.entries[j].covers(p)) return true;
    return false;
}

int minimal_unblocked_index(const PlaneTree& tree, const ConfigCell& cell) {
    int best = -1;
    for (int i = 0; i < cell.n(); ++i) {
        const Atom& at = cell.entries[i];
        if (at.is_edge()) continue;
        if (is_blocked(tree, cell, i)) continue;
        if (best < 0 || at.a < cell.entries[best].a) best = i;
    }
    return best;
}

std::optional<ConfigCell> principal_reduction(const PlaneTree& tree,
                                              const ConfigCell& cell) {
    int i = minimal_unblocked_index(tree, cell);
    if (i < 0) return std::nullopt;
    ConfigCell out = cell;
    int v = cell.entries[i].a;
    out.entries[i] = Atom::edge(tree.parent(v), v);
    return out;
}

bool is_order_respecting(const PlaneTree& tree, const ConfigCell& cell, int i) {
    const Atom& at = cell.entries[i];
    if (!at.is_edge())
        throw std::invalid_argument("is_order_respecting: entry is a vertex");
    int a = at.a, b = at.b;
    if (tree.parent(b) != a) return false;  // deleted edge
    for (int j = 0; j < cell.n(); ++j) {
        if (j == i) continue;
        const Atom& o = cell.entries[j];
        if (o.is_edge()) continue;
        int c = o.a;
        if (tree.adjacent(c, a) && a < c && c < b) return false;
    }
    return true;
}

int minimal_order_respecting_index(const PlaneTree& tree, const ConfigCell& cell) {
    int best = -1;
    for (int i = 0; i < cell.n(); ++i) {
        if (!cell.entries[i].is_edge()) continue;
        if (!is_order_respecting(tree, cell, i)) continue;
        // tree edges ordered by their upper endpoint
        if (best < 0 || cell.entries[i].b < cell.entries[best].b) best = i;
    }
    return best;
}

CellClass classify(const PlaneTree& tree, const ConfigCell& cell) {
    int ore = minimal_order_respecting_index(tree, cell);
    int unb = minimal_unblocked_index(tree, cell);
    if (ore < 0 && unb < 0) return {CellType::Critical, -1};
    if (ore >= 0) {
        int v = cell.entries[ore].b;
        if (unb < 0 || cell.entries[unb].a >= v)
            return {CellType::Collapsible, ore};
    }
    return {CellType::Redundant, unb};
}

GradientField build_field(const PlaneTree& tree, int n, int up_to_dim,
                          long long budget) {
    GradientField field;
    for (int d = 0; d <= up_to_dim && d <= n; ++d) {
        for (const auto& cell : enumerate_cells(tree, n, d, budget)) {
            if (classify(tree, cell).type != CellType::Redundant) continue;
            field.pairs.emplace(cell, *principal_reduction(tree, cell));
        }
    }
    return field;
}

namespace {

struct CycleSearch {
    const std::map<ConfigCell, ConfigCell>& pairs;
    int dim;
    std::map<ConfigCell, int> color;  // 0 unseen, 1 on stack, 2 done
    std::vector<ConfigCell> stack;
    std::vector<ConfigCell> cycle;

    bool dfs(const ConfigCell& tau) {
        color[tau] = 1;
        stack.push_back(tau);
        const ConfigCell& nu = pairs.at(tau);
        for (const auto& [face, sign] : faces(nu)) {
            (void)sign;
            if (face == tau || !pairs.count(face)) continue;
            int c = color.count(face) ? color[face] : 0;
            if (c == 1) {
                auto it = std::find(stack.begin(), stack.end(), face);
                cycle.assign(it, stack.end());
                cycle.push_back(face);
                return true;
            }
            if (c == 0 && dfs(face)) return true;
        }
        stack.pop_back();
        color[tau] = 2;
        return false;
    }
};

}  // namespace

AcyclicityResult check_acyclic(const GradientField& field, int dim) {
    CycleSearch cs{field.pairs, dim, {}, {}, {}};
    for (const auto& [tau, nu] : field.pairs) {
        if (tau.dim() != dim) continue;
        int c = cs.color.count(tau) ? cs.color[tau] : 0;
        if (c == 0 && cs.dfs(tau))
            return {false, cs.cycle};
    }
    return {true, {}};
}

std::map<int, CriticalCount> count_critical(const PlaneTree& tree, int n,
                                            long long budget) {
    std::map<int, CriticalCount> out;
    for (int d = 0; d <= n; ++d) {
        auto reps = orbit_representatives(tree, n, d, budget);
        if (reps.empty() && d > 0) break;
        CriticalCount cc;
        for (const auto& cell : reps)
            if (classify(tree, cell).type == CellType::Critical) ++cc.unordered;
        for (const auto& cell : enumerate_cells(tree, n, d, budget))
            if (classify(tree, cell).type == CellType::Critical) ++cc.ordered;
        out[d] = cc;
    }
    return out;
}

ClassTally tally_classes(const PlaneTree& tree, int n, int dim, long long budget) {
    ClassTally t;
    for (const auto& cell : enumerate_cells(tree, n, dim, budget)) {
        switch (classify(tree, cell).type) {
            case CellType::Critical: ++t.critical; break;
            case CellType::Redundant: ++t.redundant; break;
            case CellType::Collapsible: ++t.collapsible; break;
        }
    }
    return t;
}

}  // namespace morseconf
