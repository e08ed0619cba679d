#include "spul/bench.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

namespace spul::bench {

namespace {

BenchRow bench_source(const LabeledDigraph& g, VertexId source, Algorithm algorithm,
                      const SearchBudget& budget) {
    BenchRow row;
    row.source = source;

    const BfsTree tree = bfs(g, source);
    TargetSet targets;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == source || !tree.reached(v)) continue;
        targets.insert(v);
        row.sp_total += 1;
        if (make_rainbow_path(g, tree.path_edges(g, v)).has_value()) row.sp_correct += 1;
    }
    row.sp_infeasible = row.sp_total - row.sp_correct;

    SolveOptions options;
    options.algorithm = algorithm;
    options.use_preprocess = true;  // keeps sp_correct <= spul_found under any budget
    options.budget = budget;
    const SearchResult result = solve(g, source, targets, options);
    for (const auto& [v, outcome] : result.targets) {
        if (outcome.status == TargetStatus::kFound) row.spul_found += 1;
    }
    row.nodes_allocated = result.stats.nodes_allocated;
    row.aborted = result.stats.aborted;
    return row;
}

}  // namespace

BenchReport run_bench(const LabeledDigraph& g, std::vector<VertexId> sources, Algorithm algorithm,
                      const SearchBudget& budget, int workers) {
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    BenchReport report;
    report.rows.resize(sources.size());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(sources.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < sources.size(); ++i) {
            report.rows[i] = bench_source(g, sources[i], algorithm, budget);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next.fetch_add(1); i < sources.size(); i = next.fetch_add(1)) {
                report.rows[i] = bench_source(g, sources[i], algorithm, budget);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (const BenchRow& row : report.rows) {
        report.totals.sp_total += row.sp_total;
        report.totals.sp_correct += row.sp_correct;
        report.totals.sp_infeasible += row.sp_infeasible;
        report.totals.spul_found += row.spul_found;
        report.totals.nodes_allocated += row.nodes_allocated;
        report.totals.aborted = report.totals.aborted || row.aborted;
    }
    return report;
}

namespace {

void append_tsv_row(std::string& out, const std::string& source, const BenchRow& row) {
    out += source;
    out += '\t';
    out += std::to_string(row.sp_total);
    out += '\t';
    out += std::to_string(row.sp_correct);
    out += '\t';
    out += std::to_string(row.sp_infeasible);
    out += '\t';
    out += std::to_string(row.spul_found);
    out += '\t';
    out += std::to_string(row.nodes_allocated);
    out += '\t';
    out += row.aborted ? "yes" : "no";
    out += '\n';
}

nlohmann::ordered_json json_row(const BenchRow& row) {
    return {{"sp_total", row.sp_total},          {"sp_correct", row.sp_correct},
            {"sp_infeasible", row.sp_infeasible}, {"spul_found", row.spul_found},
            {"nodes_allocated", row.nodes_allocated}, {"aborted", row.aborted}};
}

}  // namespace

std::string write_bench_report(const BenchReport& report, const LabeledDigraph& g,
                               BenchFormat format) {
    if (format == BenchFormat::kTsv) {
        std::string out =
            "source\tsp_total\tsp_correct\tsp_infeasible\tspul_found\tnodes_allocated\taborted\n";
        for (const BenchRow& row : report.rows) {
            append_tsv_row(out, g.vertex_name(row.source), row);
        }
        append_tsv_row(out, "TOTAL", report.totals);
        return out;
    }
    nlohmann::ordered_json doc;
    doc["sources"] = nlohmann::ordered_json::array();
    for (const BenchRow& row : report.rows) {
        nlohmann::ordered_json entry{{"source", g.vertex_name(row.source)}};
        entry.update(json_row(row));
        doc["sources"].push_back(std::move(entry));
    }
    doc["totals"] = json_row(report.totals);
    return doc.dump(2) + "\n";
}

}  // namespace spul::bench
