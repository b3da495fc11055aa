#include "morseconf/config_cell.hpp"

#include <algorithm>
#include <stdexcept>

namespace morseconf {

int ConfigCell::dim() const {
    int d = 0;
    for (const auto& e : entries) d += e.is_edge();
    return d;
}

bool ConfigCell::valid() const {
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (!entries[i].disjoint_from(entries[j])) return false;
    return true;
}

std::string to_string(const Atom& a) {
    if (a.is_edge())
        return "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
    return std::to_string(a.a);
}

std::string to_string(const ConfigCell& c) {
    std::string out = "[";
    for (int i = 0; i < c.n(); ++i) {
        if (i) out += " ";
        out += to_string(c.entries[i]);
    }
    return out + "]";
}

namespace {

// All atoms of the graph, in the global atom order.
std::vector<Atom> all_atoms(const PlaneTree& tree) {
    std::vector<Atom> atoms;
    for (int v = 0; v < tree.vertex_count(); ++v) atoms.push_back(Atom::vertex(v));
    for (int v = 1; v < tree.vertex_count(); ++v) {
        auto [p, c] = tree.root_edge(v);
        atoms.push_back(Atom::edge(p, c));
    }
    for (const auto& [u, v] : tree.deleted_edges()) atoms.push_back(Atom::edge(u, v));
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

void backtrack(const std::vector<Atom>& atoms, int n, int dim, bool increasing,
               long long budget, std::vector<Atom>& cur, std::vector<char>& used,
               int edges_so_far, int first_atom, std::vector<ConfigCell>& out) {
    int slot = static_cast<int>(cur.size());
    if (slot == n) {
        if (static_cast<long long>(out.size()) >= budget)
            throw BudgetExceeded(static_cast<long long>(out.size()) + 1);
        out.push_back(ConfigCell{cur});
        return;
    }
    int remaining = n - slot - 1;
    for (size_t k = increasing ? first_atom : 0; k < atoms.size(); ++k) {
        const Atom& at = atoms[k];
        int e = edges_so_far + at.is_edge();
        // prune: edge count must be able to land exactly on dim
        if (e > dim || e + remaining < dim) continue;
        if (used[at.a] || used[at.b]) continue;
        used[at.a] = used[at.b] = 1;
        cur.push_back(at);
        backtrack(atoms, n, dim, increasing, budget, cur, used, e,
                  static_cast<int>(k) + 1, out);
        cur.pop_back();
        used[at.a] = used[at.b] = 0;
    }
}

std::vector<ConfigCell> enumerate_impl(const PlaneTree& tree, int n, int dim,
                                       bool increasing, long long budget) {
    if (n < 1) throw std::invalid_argument("enumerate_cells: n >= 1 required");
    std::vector<ConfigCell> out;
    if (dim < 0 || dim > n || n > tree.vertex_count()) return out;
    auto atoms = all_atoms(tree);
    std::vector<Atom> cur;
    std::vector<char> used(tree.vertex_count(), 0);
    backtrack(atoms, n, dim, increasing, budget, cur, used, 0, 0, out);
    return out;
}

}  // namespace

std::vector<ConfigCell> enumerate_cells(const PlaneTree& tree, int n, int dim,
                                        long long budget) {
    return enumerate_impl(tree, n, dim, false, budget);
}

std::vector<ConfigCell> orbit_representatives(const PlaneTree& tree, int n, int dim,
                                              long long budget) {
    return enumerate_impl(tree, n, dim, true, budget);
}

ConfigCell to_unordered(const ConfigCell& cell) {
    ConfigCell c = cell;
    std::sort(c.entries.begin(), c.entries.end());
    return c;
}

std::vector<std::pair<ConfigCell, int>> faces(const ConfigCell& cell) {
    if (cell.dim() == 0)
        throw std::invalid_argument("faces: 0-cells have no facets");
    std::vector<std::pair<ConfigCell, int>> out;
    int k = 0;
    for (int i = 0; i < cell.n(); ++i) {
        if (!cell.entries[i].is_edge()) continue;
        int sign = (k % 2 == 0) ? 1 : -1;
        ConfigCell initial = cell, final = cell;
        initial.entries[i] = Atom::vertex(cell.entries[i].a);
        final.entries[i] = Atom::vertex(cell.entries[i].b);
        out.emplace_back(std::move(final), sign);
        out.emplace_back(std::move(initial), -sign);
        ++k;
    }
    return out;
}

ConfigCell act(const ConfigCell& cell, const Permutation& sigma) {
    if (sigma.n() != cell.n())
        throw std::invalid_argument("act: size mismatch");
    ConfigCell out;
    out.entries.resize(cell.entries.size());
    for (int i = 0; i < cell.n(); ++i) out.entries[i] = cell.entries[sigma.apply(i)];
    return out;
}

}  // namespace morseconf
