#include "spul/oracle.hpp"

#include <string>

namespace spul::oracle {

namespace {

void enumerate_from(const LabeledDigraph& g, VertexId v, int length, std::vector<char>& used,
                    std::map<VertexId, RainbowCount>& best) {
    auto [it, inserted] = best.try_emplace(v, RainbowCount{length, 1});
    if (!inserted) {
        if (length < it->second.distance) {
            it->second = RainbowCount{length, 1};
        } else if (length == it->second.distance) {
            it->second.optimal_paths += 1;
        }
    }
    for (EdgeId e : g.out_edges(v)) {
        const Edge& edge = g.edge(e);
        if (used[static_cast<std::size_t>(edge.label)]) continue;
        used[static_cast<std::size_t>(edge.label)] = 1;
        enumerate_from(g, edge.target, length + 1, used, best);
        used[static_cast<std::size_t>(edge.label)] = 0;
    }
}

}  // namespace

std::map<VertexId, RainbowCount> enumerate_rainbow(const LabeledDigraph& g, VertexId s,
                                                   const OracleLimits& limits) {
    if (g.vertex_count() > limits.max_vertices) {
        throw LimitError("enumerate_rainbow: vertex count " + std::to_string(g.vertex_count()) +
                         " exceeds limit " + std::to_string(limits.max_vertices));
    }
    if (g.edge_count() > limits.max_edges) {
        throw LimitError("enumerate_rainbow: edge count " + std::to_string(g.edge_count()) +
                         " exceeds limit " + std::to_string(limits.max_edges));
    }
    if (g.label_count() > limits.max_labels) {
        throw LimitError("enumerate_rainbow: label count " + std::to_string(g.label_count()) +
                         " exceeds limit " + std::to_string(limits.max_labels));
    }
    std::map<VertexId, RainbowCount> best;
    std::vector<char> used(static_cast<std::size_t>(g.label_count()), 0);
    enumerate_from(g, s, 0, used, best);
    return best;
}

namespace {

bool augment(const std::vector<std::vector<LabelId>>& sets, std::size_t pos,
             std::map<LabelId, std::size_t>& matched_to,
             const std::map<LabelId, std::size_t>& label_index, std::vector<char>& seen) {
    for (LabelId label : sets[pos]) {
        const std::size_t li = label_index.at(label);
        if (seen[li]) continue;
        seen[li] = 1;
        auto it = matched_to.find(label);
        if (it == matched_to.end() ||
            augment(sets, it->second, matched_to, label_index, seen)) {
            matched_to[label] = pos;
            return true;
        }
    }
    return false;
}

}  // namespace

bool sdr_matching(const std::vector<std::vector<LabelId>>& sets) {
    std::map<LabelId, std::size_t> label_index;
    for (const auto& set : sets) {
        for (LabelId label : set) label_index.try_emplace(label, label_index.size());
    }
    std::map<LabelId, std::size_t> matched_to;
    for (std::size_t pos = 0; pos < sets.size(); ++pos) {
        std::vector<char> seen(label_index.size(), 0);
        if (!augment(sets, pos, matched_to, label_index, seen)) return false;
    }
    return true;
}

std::optional<Assignment> sat_brute_force(const SatInstance& inst) {
    if (inst.num_vars > 20) {
        throw LimitError("sat_brute_force: " + std::to_string(inst.num_vars) +
                         " variables exceed limit 20");
    }
    const int n = inst.num_vars;
    Assignment assignment(static_cast<std::size_t>(n), false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int j = 1; j <= n; ++j) {
            assignment[static_cast<std::size_t>(j) - 1] = (mask >> (n - j)) & 1;
        }
        if (satisfies(inst, assignment)) return assignment;
    }
    return std::nullopt;
}

}  // namespace spul::oracle
