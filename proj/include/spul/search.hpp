#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "spul/graph.hpp"

namespace spul {

/// Unlabeled BFS tree. distance[v] < 0 means v was not reached.
struct BfsTree {
    std::vector<int> distance;
    std::vector<EdgeId> parent_edge;  // kNoEdge for the source and unreached vertices

    bool reached(VertexId v) const { return distance[static_cast<std::size_t>(v)] >= 0; }
    int dist(VertexId v) const { return distance[static_cast<std::size_t>(v)]; }

    /// Edge sequence from the source to v; v must be reached.
    std::vector<EdgeId> path_edges(const LabeledDigraph& g, VertexId v) const;
};

/// Standard BFS ignoring labels; out-edges scanned in insertion order.
BfsTree bfs(const LabeledDigraph& g, VertexId s);

inline constexpr std::int64_t kUnlimited = std::numeric_limits<std::int64_t>::max();

/// Explicit bound on search memory; replaces running until physical memory
/// is exhausted. Exceeding a bound yields a flagged partial result, not an error.
struct SearchBudget {
    std::int64_t max_tree_nodes = kUnlimited;
    std::int64_t max_queue_entries = kUnlimited;
};

enum class TargetStatus {
    kFound,       // a shortest feasible path was reported
    kUnreachable, // no path at all (set by solve from BFS reachability)
    kNotFound,    // no feasible path found; proven absent when the run was not aborted
};

struct TargetOutcome {
    TargetStatus status = TargetStatus::kNotFound;
    int spul_distance = -1;  // valid when found
    int bfs_distance = -1;   // valid when BFS-reachable; filled by solve
    RainbowPath witness;     // valid when found
};

struct SearchStats {
    std::int64_t nodes_allocated = 0;
    std::int64_t paths_found = 0;
    bool aborted = false;
    std::vector<std::int64_t> nodes_by_depth;
    std::int64_t fifo_violations = 0;  // dequeued depth decreased; must stay 0
};

struct SearchResult {
    VertexId source = 0;
    std::map<VertexId, TargetOutcome> targets;
    SearchStats stats;
};

using TargetSet = std::set<VertexId>;

/// Edge-tree BFS: grows the full shortest-feasible-path tree over edges,
/// reporting each vertex the first time any feasible path reaches it.
/// With explicit targets the search stops once all of them are found;
/// without targets it runs until the queue is exhausted or the budget trips.
SearchResult alg_a(const LabeledDigraph& g, VertexId s,
                   const std::optional<TargetSet>& targets, const SearchBudget& budget);

/// Compressed-arc variant: parallel edges collapse into label sets, and a
/// path is feasible iff its label-set sequence admits a system of distinct
/// representatives. Distances agree with alg_a on every graph.
SearchResult alg_b(const LabeledDigraph& g, VertexId s,
                   const std::optional<TargetSet>& targets, const SearchBudget& budget);

/// First assignment of one label per set, all distinct, found by depth-first
/// backtracking in position order, labels tried in ascending id order.
std::optional<std::vector<LabelId>> sdr_backtrack(const std::vector<std::vector<LabelId>>& sets);

/// Two-stage BFS preprocessing: the reachable set (for early termination)
/// plus every vertex whose BFS-tree path is itself feasible, reported with
/// that path (optimal, since the BFS distance lower-bounds the SPUL distance).
struct Preprocessing {
    std::vector<bool> reachable;  // indexed by vertex id
    std::map<VertexId, RainbowPath> early_found;
};

Preprocessing preprocess(const LabeledDigraph& g, VertexId s);

enum class Algorithm { kA, kB };

struct SolveOptions {
    Algorithm algorithm = Algorithm::kA;
    bool use_preprocess = false;
    SearchBudget budget;
};

/// Orchestrates optional preprocessing and the chosen algorithm, restricted
/// to not-yet-found reachable targets. Targets absent means every vertex;
/// an explicit empty set returns immediately. BFS distances are filled in
/// for reporting, and BFS-unreachable targets are marked unreachable.
SearchResult solve(const LabeledDigraph& g, VertexId s,
                   const std::optional<TargetSet>& targets, const SolveOptions& options);

}  // namespace spul
