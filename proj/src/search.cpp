#include "spul/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

namespace spul {

std::vector<EdgeId> BfsTree::path_edges(const LabeledDigraph& g, VertexId v) const {
    std::vector<EdgeId> edges;
    for (EdgeId e = parent_edge[static_cast<std::size_t>(v)]; e != kNoEdge;
         e = parent_edge[static_cast<std::size_t>(g.edge(e).source)]) {
        edges.push_back(e);
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

BfsTree bfs(const LabeledDigraph& g, VertexId s) {
    BfsTree tree;
    tree.distance.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    tree.parent_edge.assign(static_cast<std::size_t>(g.vertex_count()), kNoEdge);
    tree.distance[static_cast<std::size_t>(s)] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : g.out_edges(v)) {
            const VertexId w = g.edge(e).target;
            if (tree.distance[static_cast<std::size_t>(w)] < 0) {
                tree.distance[static_cast<std::size_t>(w)] = tree.dist(v) + 1;
                tree.parent_edge[static_cast<std::size_t>(w)] = e;
                queue.push_back(w);
            }
        }
    }
    return tree;
}

namespace {

// Node of the shortest-feasible-path tree. The root is a dummy step into s;
// the label set of a node is implicit in its chain to the root.
struct TreeNode {
    std::int32_t step;    // edge id (alg_a) or arc index (alg_b); -1 for the root
    std::int32_t parent;  // arena index, -1 for the root
    std::int32_t depth;
    LabelId label;  // label of `step`, cached for chain walks; -1 when unused
};

bool label_on_chain(const std::vector<TreeNode>& arena, std::int32_t node, LabelId label) {
    for (std::int32_t i = node; i >= 0; i = arena[static_cast<std::size_t>(i)].parent) {
        if (arena[static_cast<std::size_t>(i)].label == label) return true;
    }
    return false;
}

// Steps from the root to `node`, in path order. The root contributes none.
std::vector<std::int32_t> chain_steps(const std::vector<TreeNode>& arena, std::int32_t node) {
    std::vector<std::int32_t> steps;
    for (std::int32_t i = node; arena[static_cast<std::size_t>(i)].step >= 0;
         i = arena[static_cast<std::size_t>(i)].parent) {
        steps.push_back(arena[static_cast<std::size_t>(i)].step);
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

// Depth-first SDR search; each set must be sorted ascending so labels are
// tried in ascending id order.
bool sdr_search(std::span<const std::vector<LabelId>* const> sets, std::size_t pos,
                std::unordered_set<LabelId>& used, std::vector<LabelId>& chosen) {
    if (pos == sets.size()) return true;
    for (LabelId label : *sets[pos]) {
        if (used.contains(label)) continue;
        used.insert(label);
        chosen.push_back(label);
        if (sdr_search(sets, pos + 1, used, chosen)) return true;
        chosen.pop_back();
        used.erase(label);
    }
    return false;
}

std::optional<std::vector<LabelId>> sdr_over(std::span<const std::vector<LabelId>* const> sets) {
    std::vector<LabelId> chosen;
    chosen.reserve(sets.size());
    std::unordered_set<LabelId> used;
    if (!sdr_search(sets, 0, used, chosen)) return std::nullopt;
    return chosen;
}

// FIFO tree-search driver shared by both algorithms: arena, queue, budget
// accounting, and first-arrival reporting. Witnesses are materialized only
// when a vertex is reported, via the callback handed to allocate().
class TreeSearch {
public:
    TreeSearch(const LabeledDigraph& g, VertexId s, const std::optional<TargetSet>& targets,
               const SearchBudget& budget)
        : graph_(g), budget_(budget), has_targets_(targets.has_value()) {
        visited_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        if (has_targets_) remaining_ = *targets;
        result_.source = s;
    }

    // Appends a node to the tree and the queue. Returns false when the run
    // must stop: budget tripped (flagged aborted) or all targets found.
    template <typename WitnessFn>
    bool allocate(std::int32_t step, std::int32_t parent, LabelId label, VertexId head,
                  WitnessFn&& witness_edges) {
        if (result_.stats.nodes_allocated + 1 > budget_.max_tree_nodes) {
            result_.stats.aborted = true;
            return false;
        }
        const auto index = static_cast<std::int32_t>(arena_.size());
        const std::int32_t depth = parent < 0 ? 0 : arena_[static_cast<std::size_t>(parent)].depth + 1;
        arena_.push_back(TreeNode{step, parent, depth, label});
        result_.stats.nodes_allocated += 1;
        if (result_.stats.nodes_by_depth.size() <= static_cast<std::size_t>(depth)) {
            result_.stats.nodes_by_depth.resize(static_cast<std::size_t>(depth) + 1, 0);
        }
        result_.stats.nodes_by_depth[static_cast<std::size_t>(depth)] += 1;
        if (!visited_[static_cast<std::size_t>(head)]) {
            visited_[static_cast<std::size_t>(head)] = 1;
            report(head, depth, witness_edges());
            if (has_targets_ && remaining_.empty()) return false;
        }
        if (static_cast<std::int64_t>(queue_.size()) + 1 > budget_.max_queue_entries) {
            result_.stats.aborted = true;
            return false;
        }
        queue_.push_back(index);
        return true;
    }

    bool done() const { return queue_.empty() || (has_targets_ && remaining_.empty()); }

    std::int32_t dequeue() {
        const std::int32_t index = queue_.front();
        queue_.pop_front();
        const std::int32_t depth = arena_[static_cast<std::size_t>(index)].depth;
        if (depth < last_depth_) result_.stats.fifo_violations += 1;
        last_depth_ = depth;
        return index;
    }

    const std::vector<TreeNode>& arena() const { return arena_; }

    SearchResult take_result(const std::optional<TargetSet>& targets) {
        if (targets.has_value()) {
            for (VertexId v : *targets) {
                if (!result_.targets.contains(v)) result_.targets[v] = TargetOutcome{};
            }
        } else {
            for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
                if (!result_.targets.contains(v)) result_.targets[v] = TargetOutcome{};
            }
        }
        return std::move(result_);
    }

private:
    void report(VertexId v, std::int32_t depth, std::vector<EdgeId> witness_edges) {
        TargetOutcome outcome;
        outcome.status = TargetStatus::kFound;
        outcome.spul_distance = depth;
        // Extensions are label-checked, so the edge sequence is always valid.
        outcome.witness = std::move(*make_rainbow_path(graph_, witness_edges));
        result_.targets[v] = std::move(outcome);
        result_.stats.paths_found += 1;
        remaining_.erase(v);
    }

    const LabeledDigraph& graph_;
    SearchBudget budget_;
    bool has_targets_;
    TargetSet remaining_;
    std::vector<char> visited_;
    std::vector<TreeNode> arena_;
    std::deque<std::int32_t> queue_;
    std::int32_t last_depth_ = 0;
    SearchResult result_;
};

}  // namespace

std::optional<std::vector<LabelId>> sdr_backtrack(const std::vector<std::vector<LabelId>>& sets) {
    std::vector<std::vector<LabelId>> sorted(sets);
    for (auto& set : sorted) std::sort(set.begin(), set.end());
    std::vector<const std::vector<LabelId>*> refs;
    refs.reserve(sorted.size());
    for (const auto& set : sorted) refs.push_back(&set);
    return sdr_over(refs);
}

SearchResult alg_a(const LabeledDigraph& g, VertexId s, const std::optional<TargetSet>& targets,
                   const SearchBudget& budget) {
    TreeSearch search(g, s, targets, budget);
    bool stop = !search.allocate(-1, -1, -1, s, [] { return std::vector<EdgeId>{}; });
    while (!stop && !search.done()) {
        const std::int32_t node = search.dequeue();
        const VertexId head =
            search.arena()[static_cast<std::size_t>(node)].step < 0
                ? s
                : g.edge(search.arena()[static_cast<std::size_t>(node)].step).target;
        for (EdgeId e : g.out_edges(head)) {
            const Edge& edge = g.edge(e);
            if (label_on_chain(search.arena(), node, edge.label)) continue;
            auto witness = [&] {
                std::vector<EdgeId> edges = chain_steps(search.arena(), node);
                edges.push_back(e);
                return edges;
            };
            if (!search.allocate(e, node, edge.label, edge.target, witness)) {
                stop = true;
                break;
            }
        }
    }
    return search.take_result(targets);
}

SearchResult alg_b(const LabeledDigraph& g, VertexId s, const std::optional<TargetSet>& targets,
                   const SearchBudget& budget) {
    const std::vector<CompressedArc> arcs = compress_parallel(g);
    std::vector<std::vector<std::int32_t>> out_arcs(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        out_arcs[static_cast<std::size_t>(arcs[i].source)].push_back(static_cast<std::int32_t>(i));
    }

    // One concrete edge per arc, lowest edge id carrying the chosen label.
    auto materialize = [&](const std::vector<std::int32_t>& arc_path,
                           const std::vector<LabelId>& chosen) {
        std::vector<EdgeId> edges;
        edges.reserve(arc_path.size());
        for (std::size_t k = 0; k < arc_path.size(); ++k) {
            const CompressedArc& arc = arcs[static_cast<std::size_t>(arc_path[k])];
            for (EdgeId e : arc.edge_ids) {
                if (g.edge(e).label == chosen[k]) {
                    edges.push_back(e);
                    break;
                }
            }
        }
        return edges;
    };

    TreeSearch search(g, s, targets, budget);
    bool stop = !search.allocate(-1, -1, -1, s, [] { return std::vector<EdgeId>{}; });
    while (!stop && !search.done()) {
        const std::int32_t node = search.dequeue();
        const VertexId head =
            search.arena()[static_cast<std::size_t>(node)].step < 0
                ? s
                : arcs[static_cast<std::size_t>(search.arena()[static_cast<std::size_t>(node)].step)].target;
        std::vector<std::int32_t> arc_path = chain_steps(search.arena(), node);
        std::vector<const std::vector<LabelId>*> sets;
        sets.reserve(arc_path.size() + 1);
        for (std::int32_t a : arc_path) sets.push_back(&arcs[static_cast<std::size_t>(a)].labels);
        for (std::int32_t a : out_arcs[static_cast<std::size_t>(head)]) {
            const CompressedArc& arc = arcs[static_cast<std::size_t>(a)];
            sets.push_back(&arc.labels);
            const auto chosen = sdr_over(sets);
            sets.pop_back();
            if (!chosen.has_value()) continue;
            auto witness = [&] {
                arc_path.push_back(a);
                std::vector<EdgeId> edges = materialize(arc_path, *chosen);
                arc_path.pop_back();
                return edges;
            };
            if (!search.allocate(a, node, -1, arc.target, witness)) {
                stop = true;
                break;
            }
        }
    }
    return search.take_result(targets);
}

Preprocessing preprocess(const LabeledDigraph& g, VertexId s) {
    Preprocessing out;
    out.reachable.assign(static_cast<std::size_t>(g.vertex_count()), false);
    const BfsTree tree = bfs(g, s);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!tree.reached(v)) continue;
        out.reachable[static_cast<std::size_t>(v)] = true;
        auto path = make_rainbow_path(g, tree.path_edges(g, v));
        if (path.has_value()) out.early_found.emplace(v, std::move(*path));
    }
    return out;
}

SearchResult solve(const LabeledDigraph& g, VertexId s, const std::optional<TargetSet>& targets,
                   const SolveOptions& options) {
    SearchResult result;
    result.source = s;
    if (targets.has_value() && targets->empty()) return result;

    const BfsTree tree = bfs(g, s);

    TargetSet requested;
    if (targets.has_value()) {
        requested = *targets;
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v) requested.insert(v);
    }

    std::map<VertexId, TargetOutcome> found;
    std::optional<TargetSet> search_targets = targets;
    if (options.use_preprocess) {
        Preprocessing pre = preprocess(g, s);
        for (auto& [v, path] : pre.early_found) {
            TargetOutcome outcome;
            outcome.status = TargetStatus::kFound;
            outcome.spul_distance = path.length();
            outcome.witness = std::move(path);
            found.emplace(v, std::move(outcome));
        }
        TargetSet main_targets;
        for (VertexId v : requested) {
            if (pre.reachable[static_cast<std::size_t>(v)] && !found.contains(v)) main_targets.insert(v);
        }
        search_targets = std::move(main_targets);
    }

    if (!options.use_preprocess || !search_targets->empty()) {
        SearchResult raw = options.algorithm == Algorithm::kA
                               ? alg_a(g, s, search_targets, options.budget)
                               : alg_b(g, s, search_targets, options.budget);
        result.stats = raw.stats;
        for (auto& [v, outcome] : raw.targets) {
            if (outcome.status == TargetStatus::kFound && !found.contains(v)) {
                found.emplace(v, std::move(outcome));
            }
        }
    }

    for (VertexId v : requested) {
        TargetOutcome row;
        auto it = found.find(v);
        if (it != found.end()) {
            row = it->second;
        } else if (!tree.reached(v)) {
            row.status = TargetStatus::kUnreachable;
        }
        if (tree.reached(v)) row.bfs_distance = tree.dist(v);
        result.targets.emplace(v, std::move(row));
    }
    result.stats.paths_found = static_cast<std::int64_t>(found.size());
    return result;
}

}  // namespace spul
