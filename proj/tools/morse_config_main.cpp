// morse-config: configuration-space toolkit for plane trees.
//
// Subcommands: analyze, graph, verify, homology, invariants, census,
// classify, subdivide.  All output is deterministic for identical inputs.
// Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 budget refusal.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "morseconf/json_io.hpp"

using namespace morseconf;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string tree_path;
    int n = 2;
    int s_max = 5;
    std::string format = "text";
    long long budget = 1000000;
    bool torsion = false;
};

PlaneTree load_tree(const RunConfig& cfg) {
    std::ifstream in(cfg.tree_path);
    if (!in) throw CLI::ValidationError("--tree", "cannot open " + cfg.tree_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return PlaneTree::parse(ss.str());
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_n = true) {
    cmd->add_option("--tree", cfg.tree_path, "plane-tree parenthesis file")->required();
    if (with_n) cmd->add_option("--n", cfg.n, "number of particles")->required();
    cmd->add_option("--budget", cfg.budget, "max enumerated cells per dimension");
}

int run_subdivide(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg);
    std::cout << t.subdivided_for(cfg.n).to_parenthesis() << "\n";
    return 0;
}

int run_classify(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg).subdivided_for(cfg.n);
    std::cout << classification_report(t, cfg.n, cfg.budget).dump(2) << "\n";
    return 0;
}

int run_graph(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg).subdivided_for(cfg.n);
    MorseGraph g = build_morse_graph(t, cfg.n, cfg.budget);
    if (cfg.format == "dot")
        std::cout << to_dot(g);
    else
        std::cout << morse_graph_to_json(g).dump(2) << "\n";
    return 0;
}

int run_verify(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg).subdivided_for(cfg.n);
    MorseGraph g = build_morse_graph(t, cfg.n, cfg.budget);
    StructureReport rep = verify_structure(g, t, cfg.n);
    CensusTable table = census(t, cfg.n);
    std::cout << "edges observed/predicted: " << rep.total_edges << "/"
              << table.total << "\n";
    for (const auto& msg : rep.mismatches) std::cout << "MISMATCH: " << msg << "\n";
    if (!rep.ok || rep.total_edges != table.total) {
        std::cout << "verify: FAILED\n";
        return 1;
    }
    std::cout << "verify: OK\n";
    return 0;
}

int run_homology(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg).subdivided_for(cfg.n);
    auto matrices = boundary_matrices(t, cfg.n, -1, cfg.budget);
    auto rep = smith_betti(matrices, cfg.torsion);
    std::cout << homology_to_json(rep).dump(2) << "\n";
    if (!rep.torsion.empty())
        std::cerr << "warning: torsion detected in integral homology\n";
    return 0;
}

int run_invariants(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg);
    InvariantReport rep = tc_table(t, cfg.n, cfg.s_max);
    rep.euler_from_critical =
        euler_from_critical(t.subdivided_for(cfg.n), cfg.n, cfg.budget);
    std::cout << invariants_to_json(rep).dump(2) << "\n";
    return 0;
}

int run_census(const RunConfig& cfg) {
    PlaneTree t = load_tree(cfg);
    std::cout << census_to_json(census(t, cfg.n)).dump(2) << "\n";
    return 0;
}

int run_analyze(const RunConfig& cfg) {
    PlaneTree t0 = load_tree(cfg);
    PlaneTree t = t0.subdivided_for(cfg.n);
    json out;
    out["tree"] = {{"vertices", t.vertex_count()},
                   {"essential", t.essential_count()},
                   {"parenthesis", t.to_parenthesis()}};
    out["classification"] = classification_report(t, cfg.n, cfg.budget);
    MorseGraph g = build_morse_graph(t, cfg.n, cfg.budget);
    long long factorial = 1;
    for (int k = 2; k <= cfg.n; ++k) factorial *= k;
    out["morse_graph"] = {{"vertices", factorial},
                          {"edges", (long long)g.edges.size()}};
    InvariantReport inv = tc_table(t0, cfg.n, cfg.s_max);
    inv.euler_from_critical = euler_from_critical(t, cfg.n, cfg.budget);
    out["invariants"] = invariants_to_json(inv);
    auto matrices = boundary_matrices(t, cfg.n, -1, cfg.budget);
    out["homology"] = homology_to_json(smith_betti(matrices, cfg.torsion));
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discretized configuration spaces of trees: gradient field, "
                 "Morse graph, invariants, homology"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "full report for one (tree, n)");
    add_common(analyze, cfg);
    analyze->add_option("--s-max", cfg.s_max, "largest s for TC_s");
    analyze->add_flag("--torsion", cfg.torsion, "compute torsion invariant factors");

    auto* graph = app.add_subcommand("graph", "Morse graph export");
    add_common(graph, cfg);
    graph->add_option("--format", cfg.format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));

    auto* verify = app.add_subcommand("verify", "check Morse-graph structure against "
                                                "the closed-form census");
    add_common(verify, cfg);

    auto* homology = app.add_subcommand("homology", "integer homology of the cubical model");
    add_common(homology, cfg);
    homology->add_flag("--torsion", cfg.torsion, "compute torsion invariant factors");

    auto* invariants = app.add_subcommand("invariants", "closed-form invariant table");
    add_common(invariants, cfg);
    invariants->add_option("--s-max", cfg.s_max, "largest s for TC_s");

    auto* census_cmd = app.add_subcommand("census", "predicted sublevel table");
    add_common(census_cmd, cfg);

    auto* classify_cmd = app.add_subcommand("classify", "cell classification counts");
    add_common(classify_cmd, cfg);

    auto* subdivide = app.add_subcommand("subdivide", "subdivide the tree for n particles");
    add_common(subdivide, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(cfg);
        if (app.got_subcommand(graph)) return run_graph(cfg);
        if (app.got_subcommand(verify)) return run_verify(cfg);
        if (app.got_subcommand(homology)) return run_homology(cfg);
        if (app.got_subcommand(invariants)) return run_invariants(cfg);
        if (app.got_subcommand(census_cmd)) return run_census(cfg);
        if (app.got_subcommand(classify_cmd)) return run_classify(cfg);
        if (app.got_subcommand(subdivide)) return run_subdivide(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << " (raise --budget to override)\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
