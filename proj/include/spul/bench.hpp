#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spul/graph.hpp"
#include "spul/search.hpp"

namespace spul::bench {

/// Per-source path statistics: how many BFS shortest paths exist, how many
/// of those happen to be feasible, and how many targets have a feasible
/// path at all.
struct BenchRow {
    VertexId source = 0;
    std::int64_t sp_total = 0;       // BFS-reachable targets (source excluded)
    std::int64_t sp_correct = 0;     // targets whose BFS witness repeats no label
    std::int64_t sp_infeasible = 0;  // sp_total - sp_correct
    std::int64_t spul_found = 0;     // targets with a feasible path found
    std::int64_t nodes_allocated = 0;
    bool aborted = false;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // ordered by source vertex id
    BenchRow totals;             // sums over rows; totals.source is meaningless
};

/// Runs the classification per source. The feasible search always merges the
/// stage-two BFS witnesses first, so sp_correct <= spul_found holds even
/// when a budget truncates the main search. Sources may be processed by
/// parallel workers; rows come back sorted by source id either way.
BenchReport run_bench(const LabeledDigraph& g, std::vector<VertexId> sources,
                      Algorithm algorithm, const SearchBudget& budget, int workers = 1);

enum class BenchFormat { kTsv, kJson };

/// TSV: header, one row per source, then a TOTAL row. JSON mirrors the rows.
std::string write_bench_report(const BenchReport& report, const LabeledDigraph& g,
                               BenchFormat format);

}  // namespace spul::bench
