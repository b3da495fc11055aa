#include "morseconf/json_io.hpp"

namespace morseconf {

using nlohmann::json;

json cell_to_json(const ConfigCell& cell) {
    json entries = json::array();
    for (const Atom& a : cell.entries) {
        if (a.is_edge())
            entries.push_back({{"e", {a.a, a.b}}});
        else
            entries.push_back({{"v", a.a}});
    }
    return {{"entries", entries}};
}

ConfigCell cell_from_json(const json& j) {
    ConfigCell cell;
    for (const auto& e : j.at("entries")) {
        if (e.contains("v"))
            cell.entries.push_back(Atom::vertex(e.at("v").get<int>()));
        else
            cell.entries.push_back(
                Atom::edge(e.at("e").at(0).get<int>(), e.at("e").at(1).get<int>()));
    }
    return cell;
}

json morse_graph_to_json(const MorseGraph& graph) {
    json edges = json::array();
    for (const auto& e : graph.edges) {
        edges.push_back({{"source", e.source.images()},
                         {"target", e.target.images()},
                         {"sublevel", {e.level_i, e.level_j}},
                         {"cell", cell_to_json(e.cell)}});
    }
    return {{"n", graph.n}, {"edges", edges}};
}

MorseGraph morse_graph_from_json(const json& j) {
    MorseGraph g;
    g.n = j.at("n").get<int>();
    for (const auto& je : j.at("edges")) {
        MorseEdge e;
        e.source = Permutation(je.at("source").get<std::vector<int>>());
        e.target = Permutation(je.at("target").get<std::vector<int>>());
        e.level_i = je.at("sublevel").at(0).get<int>();
        e.level_j = je.at("sublevel").at(1).get<int>();
        e.cell = cell_from_json(je.at("cell"));
        g.edges.push_back(std::move(e));
    }
    return g;
}

json classification_report(const PlaneTree& tree, int n, long long budget) {
    json out = json::array();
    for (int dim = 0; dim <= n; ++dim) {
        ClassTally t = tally_classes(tree, n, dim, budget);
        if (t.total() == 0 && dim > 0) break;
        out.push_back({{"dim", dim},
                       {"critical", t.critical},
                       {"redundant", t.redundant},
                       {"collapsible", t.collapsible}});
    }
    return out;
}

json census_to_json(const CensusTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows)
        rows.push_back({{"i", r.i},
                        {"j", r.j},
                        {"multiplicity", r.multiplicity},
                        {"orbits", r.orbits},
                        {"cycles_per_orbit", r.cycles_per_orbit},
                        {"edges", r.edges}});
    return {{"rows", rows}, {"total_edges", table.total}};
}

json homology_to_json(const HomologyReport& rep) {
    json betti = json::object();
    for (const auto& [p, b] : rep.betti) betti[std::to_string(p)] = b;
    json torsion = json::object();
    for (const auto& [p, factors] : rep.torsion) {
        json fs = json::array();
        for (const auto& f : factors) fs.push_back(f.str());
        torsion[std::to_string(p)] = fs;
    }
    return {{"betti", betti}, {"torsion", torsion}, {"euler", rep.euler}};
}

json invariants_to_json(const InvariantReport& rep) {
    json m = json::object();
    for (const auto& [r, v] : rep.m) m[std::to_string(r)] = v;
    json tc = json::object();
    for (const auto& [s, v] : rep.tc) tc[std::to_string(s)] = v;
    json out = {{"m_r", m},
                {"essential_count", rep.essential_count},
                {"k_n_g", rep.k_n_g},
                {"ell", rep.ell},
                {"hdim", rep.hdim},
                {"cat", rep.cat},
                {"tc", tc},
                {"y_graph_exception", rep.y_graph_exception},
                {"euler_from_critical", rep.euler_from_critical}};
    if (rep.betti1_predicted)
        out["betti1_predicted"] = *rep.betti1_predicted;
    return out;
}

}  // namespace morseconf
