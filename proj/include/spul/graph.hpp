#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spul {

using VertexId = std::int32_t;
using LabelId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;

/// Bijection between external names and dense ids, in first-appearance order.
class NameTable {
public:
    std::int32_t intern(std::string_view name);
    std::optional<std::int32_t> find(std::string_view name) const;
    const std::string& name(std::int32_t id) const { return names_[static_cast<std::size_t>(id)]; }
    std::int32_t size() const { return static_cast<std::int32_t>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::int32_t> ids_;
};

struct Edge {
    EdgeId id;
    VertexId source;
    VertexId target;
    LabelId label;
};

struct EdgeTriple {
    std::string source;
    std::string target;
    std::string label;
};

/// Directed labeled multigraph. Parallel edges and self-loops are allowed;
/// the structure is immutable once built.
class LabeledDigraph {
public:
    LabeledDigraph() = default;
    explicit LabeledDigraph(std::span<const EdgeTriple> triples,
                            std::span<const std::string> extra_vertices = {});

    VertexId vertex_count() const { return vertices_.size(); }
    LabelId label_count() const { return labels_.size(); }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }

    /// Out-edges of v in edge-insertion order (the universal tie-break order).
    std::span<const EdgeId> out_edges(VertexId v) const {
        return out_adjacency_[static_cast<std::size_t>(v)];
    }

    const std::string& vertex_name(VertexId v) const { return vertices_.name(v); }
    const std::string& label_name(LabelId l) const { return labels_.name(l); }
    std::optional<VertexId> find_vertex(std::string_view name) const { return vertices_.find(name); }
    std::optional<LabelId> find_label(std::string_view name) const { return labels_.find(name); }

private:
    NameTable vertices_;
    NameTable labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_adjacency_;
};

/// Interns names in first-appearance order; duplicate triples become parallel
/// edges. Extra vertices (interned after the edge endpoints) allow isolated
/// vertices, which the triple form cannot express.
LabeledDigraph build_graph(std::span<const EdgeTriple> triples,
                           std::span<const std::string> extra_vertices = {});

/// Path whose edges carry pairwise-distinct labels. Vertices may repeat.
struct RainbowPath {
    std::vector<EdgeId> edges;
    std::vector<LabelId> used_labels;  // sorted, one per edge
    int length() const { return static_cast<int>(edges.size()); }
};

/// Builds a RainbowPath from an edge sequence, computing its label set.
/// Returns nullopt if the edges do not chain or a label repeats.
std::optional<RainbowPath> make_rainbow_path(const LabeledDigraph& g, std::span<const EdgeId> edges);

/// Vertex sequence visited by a path starting at `start` (length + 1 entries).
std::vector<VertexId> path_vertices(const LabeledDigraph& g, VertexId start, const RainbowPath& path);

/// Super-edge between one ordered vertex pair, aggregating all parallel edges.
struct CompressedArc {
    VertexId source;
    VertexId target;
    std::vector<LabelId> labels;    // deduplicated, sorted ascending
    std::vector<EdgeId> edge_ids;   // underlying edges, insertion order
};

/// One arc per ordered (source, target) pair with at least one edge,
/// ordered by first edge appearance.
std::vector<CompressedArc> compress_parallel(const LabeledDigraph& g);

}  // namespace spul
