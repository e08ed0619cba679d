// Acceptance suite: runs every acceptance criterion at its stated budget and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "spul/bench.hpp"
#include "spul/io.hpp"
#include "spul/oracle.hpp"
#include "spul/reduction.hpp"
#include "spul/search.hpp"

using namespace spul;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

std::vector<std::string> witness_labels(const LabeledDigraph& g, const RainbowPath& path) {
    std::vector<std::string> labels;
    for (EdgeId e : path.edges) labels.push_back(g.label_name(g.edge(e).label));
    return labels;
}

std::set<VertexId> found_set(const SearchResult& result) {
    std::set<VertexId> found;
    for (const auto& [v, outcome] : result.targets) {
        if (outcome.status == TargetStatus::kFound) found.insert(v);
    }
    return found;
}

// Criterion 1: on the six-edge detour instance the unlabeled shortest path
// has length 3 with labels (1,2,1); both exact algorithms return a feasible
// distance of 4 with labels (1,2,3,4) through C and D.
Check criterion_detour() {
    Check check;
    const LabeledDigraph g = testing::detour_graph();
    const VertexId t = *g.find_vertex("T");

    const BfsTree tree = bfs(g, 0);
    check.expect(tree.dist(t) == 3, "BFS distance to T is not 3");
    const auto bfs_path = make_rainbow_path(g, tree.path_edges(g, t));
    check.expect(!bfs_path.has_value(), "BFS witness should repeat a label");
    std::vector<std::string> bfs_labels;
    for (EdgeId e : tree.path_edges(g, t)) bfs_labels.push_back(g.label_name(g.edge(e).label));
    check.expect(bfs_labels == std::vector<std::string>{"1", "2", "1"}, "BFS labels not (1,2,1)");

    for (const Algorithm algorithm : {Algorithm::kA, Algorithm::kB}) {
        SolveOptions options;
        options.algorithm = algorithm;
        const SearchResult result = solve(g, 0, TargetSet{t}, options);
        const TargetOutcome& outcome = result.targets.at(t);
        check.expect(outcome.status == TargetStatus::kFound, "feasible path not found");
        check.expect(outcome.spul_distance == 4, "feasible distance is not 4");
        check.expect(witness_labels(g, outcome.witness) ==
                         std::vector<std::string>{"1", "2", "3", "4"},
                     "witness labels not (1,2,3,4)");
        const auto vertices = path_vertices(g, 0, outcome.witness);
        check.expect(vertices == std::vector<VertexId>{0, 1, *g.find_vertex("C"),
                                                       *g.find_vertex("D"), t},
                     "witness does not run through C and D");
    }
    return check;
}

// Criterion 2: over 200 random CNF instances (n <= 8, m <= 6, widths 1-3),
// encoded feasibility equals brute-force satisfiability in 100% of cases,
// and decoding the witness satisfies the formula in every satisfiable case.
Check criterion_reduction_equivalence() {
    Check check;
    std::mt19937 rng(1002);
    for (int round = 0; round < 200 && check.ok; ++round) {
        const SatInstance inst = testing::random_cnf(rng, 8, 6, 3);
        const auto agreement = reduction::rainbow_iff_sat(inst);
        check.expect(agreement.spul_feasible == agreement.sat_satisfiable,
                     "feasibility and satisfiability disagree on instance " +
                         std::to_string(round));
        if (agreement.spul_feasible) {
            const auto rmap = reduction::encode(inst);
            const SearchResult result =
                alg_a(rmap.graph, rmap.source, TargetSet{rmap.sink}, SearchBudget{});
            const Assignment assignment =
                reduction::decode(rmap, result.targets.at(rmap.sink).witness);
            check.expect(satisfies(inst, assignment),
                         "decoded assignment fails instance " + std::to_string(round));
        }
    }
    return check;
}

// Criterion 3: over 500 random graphs within the oracle limits, per-target
// distances from alg_a, alg_b and the exhaustive enumeration are identical.
Check criterion_oracle_equivalence() {
    Check check;
    std::mt19937 rng(1003);
    for (int round = 0; round < 500 && check.ok; ++round) {
        const LabeledDigraph g = testing::random_graph(rng);
        const VertexId s = std::uniform_int_distribution<VertexId>(0, g.vertex_count() - 1)(rng);
        const auto truth = oracle::enumerate_rainbow(g, s);
        const SearchResult a = alg_a(g, s, std::nullopt, SearchBudget{});
        const SearchResult b = alg_b(g, s, std::nullopt, SearchBudget{});
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const bool feasible = truth.contains(v);
            const TargetOutcome& oa = a.targets.at(v);
            const TargetOutcome& ob = b.targets.at(v);
            check.expect((oa.status == TargetStatus::kFound) == feasible &&
                             (ob.status == TargetStatus::kFound) == feasible,
                         "found/infeasible mismatch on graph " + std::to_string(round));
            if (feasible) {
                check.expect(oa.spul_distance == truth.at(v).distance &&
                                 ob.spul_distance == truth.at(v).distance,
                             "distance mismatch on graph " + std::to_string(round));
            }
        }
    }
    return check;
}

// Criterion 4: over 1000 random set lists (<= 8 positions, universe <= 8),
// the backtracking finds an assignment iff the matching oracle says one exists.
Check criterion_sdr_crosscheck() {
    Check check;
    std::mt19937 rng(1004);
    for (int round = 0; round < 1000 && check.ok; ++round) {
        const auto sets = testing::random_label_sets(rng);
        const auto assignment = sdr_backtrack(sets);
        check.expect(assignment.has_value() == oracle::sdr_matching(sets),
                     "backtracking and matching disagree on list " + std::to_string(round));
        if (assignment.has_value()) {
            std::set<LabelId> distinct(assignment->begin(), assignment->end());
            check.expect(distinct.size() == sets.size(), "assignment repeats a label");
        }
    }
    return check;
}

// Criterion 5: on 100 random graphs, for every source,
// sp_correct + sp_infeasible == sp_total and sp_correct <= spul_found <= sp_total.
Check criterion_bench_invariants() {
    Check check;
    std::mt19937 rng(1005);
    for (int round = 0; round < 100 && check.ok; ++round) {
        const LabeledDigraph g = testing::random_graph(rng);
        std::vector<VertexId> sources;
        for (VertexId v = 0; v < g.vertex_count(); ++v) sources.push_back(v);
        const auto report = bench::run_bench(g, sources, Algorithm::kB, SearchBudget{});
        for (const auto& row : report.rows) {
            check.expect(row.sp_correct + row.sp_infeasible == row.sp_total,
                         "correct + infeasible != total on graph " + std::to_string(round));
            check.expect(row.sp_correct <= row.spul_found && row.spul_found <= row.sp_total,
                         "correct <= spul <= total violated on graph " + std::to_string(round));
        }
    }
    return check;
}

// Criterion 6: a chain of ten 4-edge parallel bundles (stage-local labels)
// blows the feasible tree up to ~1.4M nodes; a 10^4 node budget aborts with
// partial results and doubling the budget finds a superset of targets.
Check criterion_budget_semantics() {
    Check check;
    std::vector<EdgeTriple> triples;
    for (int stage = 0; stage < 10; ++stage) {
        for (int k = 0; k < 4; ++k) {
            triples.push_back(EdgeTriple{"n" + std::to_string(stage), "n" + std::to_string(stage + 1),
                                         "s" + std::to_string(stage) + "L" + std::to_string(k)});
        }
    }
    const LabeledDigraph g = build_graph(triples);

    SearchBudget budget;
    budget.max_tree_nodes = 10000;
    const SearchResult small = alg_a(g, 0, std::nullopt, budget);
    check.expect(small.stats.aborted, "10^4 node budget did not abort");
    check.expect(small.stats.nodes_allocated == 10000, "abort not at the budget boundary");
    const auto found_small = found_set(small);
    check.expect(!found_small.empty() && found_small.size() < static_cast<std::size_t>(g.vertex_count()),
                 "partial results missing");

    budget.max_tree_nodes = 20000;
    const SearchResult large = alg_a(g, 0, std::nullopt, budget);
    const auto found_large = found_set(large);
    for (VertexId v : found_small) {
        check.expect(found_large.contains(v), "larger budget lost a found target");
    }
    return check;
}

// Criterion 7: the organism networks behind the published tables are not
// shipped, so the bench command is checked against a golden file on a
// synthetic network instead: same statistic columns, byte-exact output.
Check criterion_bench_golden() {
    Check check;
    const fs::path golden_dir{SPUL_GOLDEN_DIR};
    const fs::path input = golden_dir / "bench_input.tsv";
    const fs::path expected_path = golden_dir / "bench_expected.tsv";
    check.expect(fs::exists(input) && fs::exists(expected_path), "golden files missing");
    if (!check.ok) return check;

    const fs::path out = fs::temp_directory_path() / "spul_acceptance_bench.tsv";
    const std::string command = std::string(SPUL_CLI_PATH) + " bench --graph " + input.string() +
                                " --all-sources --output " + out.string();
    const int status = std::system(command.c_str());
    check.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "bench command failed");

    std::ostringstream actual;
    actual << std::ifstream(out).rdbuf();
    std::ostringstream expected;
    expected << std::ifstream(expected_path).rdbuf();
    check.expect(!expected.str().empty(), "golden file empty");
    check.expect(actual.str() == expected.str(), "bench output differs from the golden file");
    check.expect(actual.str().find("source\tsp_total\tsp_correct\tsp_infeasible\tspul_found"
                                   "\tnodes_allocated\taborted\n") == 0,
                 "statistic columns missing");
    std::error_code ec;
    fs::remove(out, ec);
    return check;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "detour instance: BFS 3 via (1,2,1), feasible 4 via (1,2,3,4)", 1.0, criterion_detour},
        {2, "200 random CNFs: encoded feasibility == satisfiability, decode satisfies", 30.0,
         criterion_reduction_equivalence},
        {3, "500 random graphs: alg_a == alg_b == enumeration distances", 60.0,
         criterion_oracle_equivalence},
        {4, "1000 random set lists: backtracking iff matching", 5.0, criterion_sdr_crosscheck},
        {5, "100 random graphs: bench invariants at every source", 30.0,
         criterion_bench_invariants},
        {6, "10-stage bundle chain: 10^4 node budget aborts, double budget is a superset", 10.0,
         criterion_budget_semantics},
        {7, "bench statistics on a synthetic network match the golden file", 60.0,
         criterion_bench_golden},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            check = criterion.run();
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.limit_seconds) {
            check.ok = false;
            check.detail = "time limit exceeded";
        }
        std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)%s%s\n",
                    check.ok ? "PASS" : "FAIL", criterion.id, criterion.name.c_str(), elapsed,
                    criterion.limit_seconds, check.ok ? "" : " -- ",
                    check.ok ? "" : check.detail.c_str());
        failures += check.ok ? 0 : 1;
    }
    return failures;
}
