#include "morseconf/morse_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "morseconf/counting.hpp"
#include "morseconf/gradient_field.hpp"

namespace morseconf {

Permutation gradient_terminal(const PlaneTree& tree, ConfigCell zero_cell) {
    if (zero_cell.dim() != 0)
        throw std::invalid_argument("gradient_terminal: expected a 0-cell");
    const long long step_limit =
        static_cast<long long>(tree.vertex_count()) * zero_cell.n() + 1;
    for (long long step = 0; step <= step_limit; ++step) {
        int i = minimal_unblocked_index(tree, zero_cell);
        if (i < 0) {
            // critical: the entries pile on the root, forming a permutation
            std::vector<int> img(zero_cell.n());
            for (int k = 0; k < zero_cell.n(); ++k) {
                if (zero_cell.entries[k].is_edge() ||
                    zero_cell.entries[k].a >= zero_cell.n())
                    throw std::logic_error(
                        "gradient_terminal: critical 0-cell is not a root stack");
                img[k] = zero_cell.entries[k].a;
            }
            return Permutation(std::move(img));
        }
        // step across W(cell) to its other endpoint: the particle moves
        // one edge toward the root
        zero_cell.entries[i] = Atom::vertex(tree.parent(zero_cell.entries[i].a));
    }
    throw std::logic_error("gradient_terminal: path did not terminate (acyclicity violated?)");
}

std::pair<int, int> sublevel_of(const PlaneTree& tree, const ConfigCell& cell) {
    (void)tree;
    if (cell.dim() != 1)
        throw std::invalid_argument("sublevel_of: expected a 1-cell");
    int n = cell.n();
    int a1 = -1;
    std::vector<int> tail;
    for (const Atom& at : cell.entries) {
        if (at.is_edge())
            a1 = at.b;
        else
            tail.push_back(at.a);
    }
    std::sort(tail.begin(), tail.end());
    int stack = 0;
    while (stack < static_cast<int>(tail.size()) && tail[stack] == stack) ++stack;
    int i = n - stack;
    int j = 1;
    for (int k = stack; k < static_cast<int>(tail.size()); ++k)
        if (tail[k] < a1) ++j;
    return {i, j};
}

MorseGraph build_morse_graph(const PlaneTree& tree, int n, long long budget) {
    if (!tree.deleted_edges().empty())
        throw std::invalid_argument("morse graph: trees only");
    MorseGraph g;
    g.n = n;
    for (const auto& cell : enumerate_cells(tree, n, 1, budget)) {
        if (classify(tree, cell).type != CellType::Critical) continue;
        int idx = 0;
        while (!cell.entries[idx].is_edge()) ++idx;
        ConfigCell initial = cell, final = cell;
        initial.entries[idx] = Atom::vertex(cell.entries[idx].a);
        final.entries[idx] = Atom::vertex(cell.entries[idx].b);
        MorseEdge e;
        e.source = gradient_terminal(tree, initial);
        e.target = gradient_terminal(tree, final);
        std::tie(e.level_i, e.level_j) = sublevel_of(tree, cell);
        e.cell = cell;
        // combinatorial sublevel must agree with the algebraic quotient
        Permutation expect =
            Permutation::sublevel_cycle(n, e.level_i, e.level_j).inverse() * e.source;
        if (expect != e.target)
            throw std::logic_error("morse graph: sublevel cross-check failed for cell " +
                                   to_string(cell));
        g.edges.push_back(std::move(e));
    }
    return g;
}

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

StructureReport verify_structure(const MorseGraph& graph, const PlaneTree& tree, int n) {
    StructureReport rep;
    auto note = [&](const std::string& msg) {
        rep.ok = false;
        rep.mismatches.push_back(msg);
    };
    long long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;

    rep.total_edges = static_cast<long long>(graph.edges.size());
    rep.predicted_total = predicted_total_edges(tree, n);
    if (rep.total_edges != rep.predicted_total)
        note("total edge count " + std::to_string(rep.total_edges) + " != predicted " +
             std::to_string(rep.predicted_total));

    // parallel-edge multiplicities, per sublevel and endpoint pair
    std::map<std::pair<Permutation, Permutation>, std::set<std::pair<int, int>>> pair_levels;
    std::map<std::tuple<int, int, Permutation, Permutation>, long long> pair_counts;
    for (const auto& e : graph.edges) {
        pair_levels[std::minmax(e.source, e.target)].insert({e.level_i, e.level_j});
        // each parallel copy of a cycle contributes one source->target edge
        ++pair_counts[{e.level_i, e.level_j, e.source, e.target}];
    }
    for (const auto& [key, levels] : pair_levels)
        if (levels.size() > 1)
            note("parallel edges between " + key.first.word() + " and " +
                 key.second.word() + " span multiple sublevels");
    for (const auto& [key, count] : pair_counts) {
        auto [i, j, s, t] = key;
        long long want = predicted_multiplicity(i, j, tree);
        if (count != want)
            note("sublevel (" + std::to_string(i) + "," + std::to_string(j) + ") pair " +
                 s.word() + "-" + t.word() + ": multiplicity " + std::to_string(count) +
                 " != " + std::to_string(want));
    }

    // orbit structure: group edges by the unordered critical cell
    std::map<ConfigCell, std::vector<const MorseEdge*>> orbits;
    std::map<ConfigCell, const MorseEdge*> by_cell;
    for (const auto& e : graph.edges) {
        orbits[to_unordered(e.cell)].push_back(&e);
        by_cell[e.cell] = &e;
    }
    auto perms = all_permutations(n);
    for (const auto& [rep_cell, members] : orbits) {
        if (static_cast<long long>(members.size()) != factorial) {
            note("orbit of " + to_string(rep_cell) + " has " +
                 std::to_string(members.size()) + " edges, expected n!");
            continue;
        }
        int i = members[0]->level_i, j = members[0]->level_j;
        std::map<Permutation, Permutation> succ;
        bool dup = false;
        for (const auto* e : members) {
            if (e->level_i != i || e->level_j != j)
                note("orbit of " + to_string(rep_cell) + " mixes sublevels");
            if (!succ.emplace(e->source, e->target).second) dup = true;
        }
        if (dup) {
            note("orbit of " + to_string(rep_cell) + " repeats a source vertex");
            continue;
        }
        // follow successor links: must decompose into n!/j disjoint j-cycles
        std::set<Permutation> seen;
        long long cycles = 0;
        bool bad_cycle = false;
        for (const auto& [start, first] : succ) {
            if (seen.count(start)) continue;
            int len = 0;
            Permutation cur = start;
            do {
                seen.insert(cur);
                cur = succ.at(cur);
                ++len;
            } while (cur != start && len <= n);
            if (cur != start || len != j) bad_cycle = true;
            ++cycles;
        }
        if (bad_cycle || cycles != factorial / j)
            note("orbit of " + to_string(rep_cell) + " does not split into n!/j " +
                 std::to_string(j) + "-cycles");
        // equivariance: acting on the cell acts on both endpoints
        const MorseEdge* base = members[0];
        for (const auto& mu : perms) {
            auto it = by_cell.find(act(base->cell, mu));
            if (it == by_cell.end()) {
                note("orbit of " + to_string(rep_cell) + ": missing translate");
                break;
            }
            if (it->second->source != base->source * mu ||
                it->second->target != base->target * mu) {
                note("orbit of " + to_string(rep_cell) + ": edge action is not equivariant");
                break;
            }
        }
    }
    return rep;
}

std::string to_dot(const MorseGraph& graph) {
    std::ostringstream os;
    os << "digraph morse {\n";
    for (const auto& p : all_permutations(graph.n))
        os << "  \"" << p.word() << "\";\n";
    for (const auto& e : graph.edges)
        os << "  \"" << e.source.word() << "\" -> \"" << e.target.word()
           << "\" [label=\"sublevel=(" << e.level_i << "," << e.level_j << ")\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace morseconf
