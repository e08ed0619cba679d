// spul - shortest paths with unique labels in directed labeled multigraphs.
//
// Subcommands:
//   solve   shortest feasible paths from one source (exact search)
//   bench   per-source SP / correct / infeasible / SPUL statistics
//   reduce  encode a DIMACS CNF formula as a path instance
//   decode  read a variable assignment off a solver result
//   oracle  brute-force enumeration ground truth for small graphs
//
// Exit codes: 0 success, 1 input or usage error, 2 budget-aborted partial result.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "spul/bench.hpp"
#include "spul/io.hpp"
#include "spul/oracle.hpp"
#include "spul/reduction.hpp"
#include "spul/search.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open `" + path + "`");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write `" + path + "`");
    out << content;
}

spul::LabeledDigraph load_graph(const std::string& path) {
    const auto parsed = spul::io::parse_edge_list(read_file(path));
    for (const auto& d : parsed.diagnostics) {
        std::cerr << (d.severity == spul::io::Severity::kError ? "error: " : "warning: ") << path
                  << ":" << d.line << ": " << d.message << "\n";
    }
    if (!parsed.ok()) throw std::runtime_error("failed to parse `" + path + "`");
    return parsed.graph;
}

spul::VertexId resolve_vertex(const spul::LabeledDigraph& g, const std::string& name) {
    const auto v = g.find_vertex(name);
    if (!v.has_value()) throw std::runtime_error("unknown vertex `" + name + "`");
    return *v;
}

struct SolveConfig {
    std::string graph_path;
    std::string source;
    std::vector<std::string> targets;
    std::string algorithm = "a";
    bool use_preprocess = false;
    std::int64_t max_nodes = 0;  // 0 = unlimited
    std::string output;
    std::string format = "tsv";
};

int run_solve(const SolveConfig& cfg) {
    const spul::LabeledDigraph g = load_graph(cfg.graph_path);
    const spul::VertexId source = resolve_vertex(g, cfg.source);
    std::optional<spul::TargetSet> targets;
    if (!cfg.targets.empty()) {
        targets.emplace();
        for (const std::string& name : cfg.targets) targets->insert(resolve_vertex(g, name));
    }
    spul::SolveOptions options;
    options.algorithm = cfg.algorithm == "b" ? spul::Algorithm::kB : spul::Algorithm::kA;
    options.use_preprocess = cfg.use_preprocess;
    if (cfg.max_nodes > 0) options.budget.max_tree_nodes = cfg.max_nodes;

    const spul::SearchResult result = spul::solve(g, source, targets, options);
    const auto format =
        cfg.format == "json" ? spul::io::OutputFormat::kJson : spul::io::OutputFormat::kTsv;
    write_output(cfg.output, spul::io::write_result(result, g, format));
    return result.stats.aborted ? 2 : 0;
}

struct BenchConfig {
    std::string graph_path;
    std::vector<std::string> sources;
    bool all_sources = false;
    std::string algorithm = "b";
    std::int64_t max_nodes = 0;
    std::string output;
    std::string format = "tsv";
};

int run_bench(const BenchConfig& cfg) {
    if (!cfg.all_sources && cfg.sources.empty()) {
        throw std::runtime_error("bench needs --source or --all-sources");
    }
    const spul::LabeledDigraph g = load_graph(cfg.graph_path);
    std::vector<spul::VertexId> sources;
    if (cfg.all_sources) {
        for (spul::VertexId v = 0; v < g.vertex_count(); ++v) sources.push_back(v);
    } else {
        for (const std::string& name : cfg.sources) sources.push_back(resolve_vertex(g, name));
    }
    spul::SearchBudget budget;
    if (cfg.max_nodes > 0) budget.max_tree_nodes = cfg.max_nodes;
    const auto algorithm = cfg.algorithm == "a" ? spul::Algorithm::kA : spul::Algorithm::kB;
    const int workers =
        cfg.all_sources ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : 1;

    const auto report = spul::bench::run_bench(g, std::move(sources), algorithm, budget, workers);
    const auto format =
        cfg.format == "json" ? spul::bench::BenchFormat::kJson : spul::bench::BenchFormat::kTsv;
    write_output(cfg.output, spul::bench::write_bench_report(report, g, format));
    return report.totals.aborted ? 2 : 0;
}

struct ReduceConfig {
    std::string cnf_path;
    std::string graph_out;
    std::string map_out;
};

int run_reduce(const ReduceConfig& cfg) {
    const spul::SatInstance inst = spul::io::parse_dimacs(read_file(cfg.cnf_path));
    const spul::reduction::ReductionMap rmap = spul::reduction::encode(inst);
    write_output(cfg.graph_out, spul::io::write_edge_list(rmap.graph));
    write_output(cfg.map_out, spul::io::write_map_file(rmap));
    return 0;
}

struct DecodeConfig {
    std::string map_path;
    std::string result_path;
};

std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = line.find(sep, start);
        if (end == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

int run_decode(const DecodeConfig& cfg) {
    const spul::io::MapFileData map = spul::io::parse_map_file(read_file(cfg.map_path));

    // A clauseless formula encodes to a single vertex: the empty path is
    // always a witness and any assignment works, so no result row is needed.
    if (map.source == map.sink) {
        for (int j = 1; j <= map.num_vars; ++j) std::cout << "x" << j << "=false\n";
        return 0;
    }

    // Chain edges are identified by (source, target, label); gadget vertex
    // names keep the triple unique within the encoded graph.
    std::map<std::tuple<std::string, std::string, std::string>, std::pair<int, bool>> chain_of;
    for (const auto& edge : map.chain_edges) {
        chain_of.emplace(std::make_tuple(edge.source, edge.target, edge.label),
                         std::make_pair(edge.var, edge.negated));
    }

    std::istringstream result_file(read_file(cfg.result_path));
    std::string line;
    std::getline(result_file, line);  // header
    std::vector<std::string> witness_labels;
    std::vector<std::string> witness_vertices;
    bool have_witness = false;
    while (std::getline(result_file, line)) {
        const auto fields = split_fields(line, '\t');
        if (fields.size() < 6 || fields[0] != map.sink || fields[1] != "found") continue;
        witness_labels = fields[4].empty() ? std::vector<std::string>{} : split_fields(fields[4], ';');
        witness_vertices = split_fields(fields[5], ';');
        have_witness = true;
        break;
    }
    if (!have_witness) {
        std::cout << "UNSAT-WITNESS-ABSENT\n";
        return 0;
    }

    std::vector<bool> assignment(static_cast<std::size_t>(map.num_vars), false);
    for (std::size_t i = 0; i < witness_labels.size(); ++i) {
        const auto key =
            std::make_tuple(witness_vertices[i], witness_vertices[i + 1], witness_labels[i]);
        const auto it = chain_of.find(key);
        if (it != chain_of.end() && it->second.second) {
            assignment[static_cast<std::size_t>(it->second.first) - 1] = true;
        }
    }
    for (int j = 1; j <= map.num_vars; ++j) {
        std::cout << "x" << j << "=" << (assignment[static_cast<std::size_t>(j) - 1] ? "true" : "false")
                  << "\n";
    }
    return 0;
}

struct OracleConfig {
    std::string graph_path;
    std::string source;
    int max_vertices = 8;
    int max_edges = 20;
    int max_labels = 6;
    std::string output;
};

int run_oracle(const OracleConfig& cfg) {
    const spul::LabeledDigraph g = load_graph(cfg.graph_path);
    const spul::VertexId source = resolve_vertex(g, cfg.source);
    spul::oracle::OracleLimits limits;
    limits.max_vertices = cfg.max_vertices;
    limits.max_edges = cfg.max_edges;
    limits.max_labels = cfg.max_labels;
    const auto counts = spul::oracle::enumerate_rainbow(g, source, limits);
    std::string out = "target\tdistance\toptimal_paths\n";
    for (const auto& [v, count] : counts) {
        out += g.vertex_name(v) + "\t" + std::to_string(count.distance) + "\t" +
               std::to_string(count.optimal_paths) + "\n";
    }
    write_output(cfg.output, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest paths with unique labels (SPUL)"};
    app.require_subcommand(1);

    SolveConfig solve_cfg;
    CLI::App* solve_cmd = app.add_subcommand("solve", "shortest feasible paths from a source");
    solve_cmd->add_option("--graph", solve_cfg.graph_path, "edge-list file")->required();
    solve_cmd->add_option("--source", solve_cfg.source, "source vertex name")->required();
    solve_cmd->add_option("--target", solve_cfg.targets, "target vertex name (repeatable)");
    solve_cmd->add_option("--algorithm", solve_cfg.algorithm, "a = edge tree, b = compressed arcs")
        ->check(CLI::IsMember({"a", "b"}));
    solve_cmd->add_flag("--preprocess", solve_cfg.use_preprocess, "BFS preprocessing");
    solve_cmd->add_option("--max-nodes", solve_cfg.max_nodes, "tree node budget")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--output", solve_cfg.output, "output file (default stdout)");
    solve_cmd->add_option("--format", solve_cfg.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    BenchConfig bench_cfg;
    CLI::App* bench_cmd = app.add_subcommand("bench", "per-source path statistics");
    bench_cmd->add_option("--graph", bench_cfg.graph_path, "edge-list file")->required();
    auto* bench_sources =
        bench_cmd->add_option("--source", bench_cfg.sources, "source vertex name (repeatable)");
    bench_cmd->add_flag("--all-sources", bench_cfg.all_sources, "run every vertex as a source")
        ->excludes(bench_sources);
    bench_cmd->add_option("--algorithm", bench_cfg.algorithm, "a or b")
        ->check(CLI::IsMember({"a", "b"}));
    bench_cmd->add_option("--max-nodes", bench_cfg.max_nodes, "tree node budget")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--output", bench_cfg.output, "output file (default stdout)");
    bench_cmd->add_option("--format", bench_cfg.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    ReduceConfig reduce_cfg;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "encode a DIMACS CNF as a path instance");
    reduce_cmd->add_option("--cnf", reduce_cfg.cnf_path, "DIMACS CNF file")->required();
    reduce_cmd->add_option("--graph-out", reduce_cfg.graph_out, "encoded edge-list file")->required();
    reduce_cmd->add_option("--map-out", reduce_cfg.map_out, "sidecar map file")->required();

    DecodeConfig decode_cfg;
    CLI::App* decode_cmd = app.add_subcommand("decode", "assignment from a solve result");
    decode_cmd->add_option("--map", decode_cfg.map_path, "sidecar map file")->required();
    decode_cmd->add_option("--result", decode_cfg.result_path, "solve result (tsv)")->required();

    OracleConfig oracle_cfg;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration (small graphs)");
    oracle_cmd->add_option("--graph", oracle_cfg.graph_path, "edge-list file")->required();
    oracle_cmd->add_option("--source", oracle_cfg.source, "source vertex name")->required();
    oracle_cmd->add_option("--max-vertices", oracle_cfg.max_vertices, "vertex limit");
    oracle_cmd->add_option("--max-edges", oracle_cfg.max_edges, "edge limit");
    oracle_cmd->add_option("--max-labels", oracle_cfg.max_labels, "label limit");
    oracle_cmd->add_option("--output", oracle_cfg.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve_cmd) return run_solve(solve_cfg);
        if (*bench_cmd) return run_bench(bench_cfg);
        if (*reduce_cmd) return run_reduce(reduce_cfg);
        if (*decode_cmd) return run_decode(decode_cfg);
        if (*oracle_cmd) return run_oracle(oracle_cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
