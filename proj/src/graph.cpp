#include "spul/graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace spul {

std::int32_t NameTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<std::int32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<std::int32_t> NameTable::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

LabeledDigraph::LabeledDigraph(std::span<const EdgeTriple> triples,
                               std::span<const std::string> extra_vertices) {
    edges_.reserve(triples.size());
    for (const EdgeTriple& t : triples) {
        const VertexId u = vertices_.intern(t.source);
        const VertexId v = vertices_.intern(t.target);
        const LabelId l = labels_.intern(t.label);
        const EdgeId e = static_cast<EdgeId>(edges_.size());
        edges_.push_back(Edge{e, u, v, l});
        out_adjacency_.resize(static_cast<std::size_t>(vertices_.size()));
        out_adjacency_[static_cast<std::size_t>(u)].push_back(e);
    }
    for (const std::string& name : extra_vertices) vertices_.intern(name);
    out_adjacency_.resize(static_cast<std::size_t>(vertices_.size()));
}

LabeledDigraph build_graph(std::span<const EdgeTriple> triples,
                           std::span<const std::string> extra_vertices) {
    return LabeledDigraph(triples, extra_vertices);
}

std::optional<RainbowPath> make_rainbow_path(const LabeledDigraph& g, std::span<const EdgeId> edges) {
    RainbowPath path;
    path.edges.assign(edges.begin(), edges.end());
    path.used_labels.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = g.edge(edges[i]);
        if (i > 0 && g.edge(edges[i - 1]).target != e.source) return std::nullopt;
        path.used_labels.push_back(e.label);
    }
    std::sort(path.used_labels.begin(), path.used_labels.end());
    if (std::adjacent_find(path.used_labels.begin(), path.used_labels.end()) != path.used_labels.end()) {
        return std::nullopt;
    }
    return path;
}

std::vector<VertexId> path_vertices(const LabeledDigraph& g, VertexId start, const RainbowPath& path) {
    std::vector<VertexId> vertices;
    vertices.reserve(path.edges.size() + 1);
    vertices.push_back(start);
    for (EdgeId e : path.edges) vertices.push_back(g.edge(e).target);
    return vertices;
}

std::vector<CompressedArc> compress_parallel(const LabeledDigraph& g) {
    std::vector<CompressedArc> arcs;
    std::map<std::pair<VertexId, VertexId>, std::size_t> arc_index;
    for (const Edge& e : g.edges()) {
        const auto key = std::make_pair(e.source, e.target);
        auto it = arc_index.find(key);
        if (it == arc_index.end()) {
            it = arc_index.emplace(key, arcs.size()).first;
            arcs.push_back(CompressedArc{e.source, e.target, {}, {}});
        }
        CompressedArc& arc = arcs[it->second];
        arc.edge_ids.push_back(e.id);
        if (std::find(arc.labels.begin(), arc.labels.end(), e.label) == arc.labels.end()) {
            arc.labels.push_back(e.label);
        }
    }
    for (CompressedArc& arc : arcs) std::sort(arc.labels.begin(), arc.labels.end());
    return arcs;
}

}  // namespace spul
