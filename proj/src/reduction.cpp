#include "spul/reduction.hpp"

#include <cstdlib>
#include <map>
#include <utility>

#include "spul/oracle.hpp"
#include "spul/search.hpp"

namespace spul::reduction {

std::string gadget_label(int var, int clause, bool negated) {
    return std::to_string(var) + "." + std::to_string(clause) + "." + (negated ? "n" : "p");
}

ReductionMap encode(const SatInstance& inst) {
    const int n = inst.num_vars;
    const int m = static_cast<int>(inst.clauses.size());
    for (const auto& clause : inst.clauses) {
        if (clause.empty()) throw std::invalid_argument("encode: empty clause");
        for (int lit : clause) {
            const int var = std::abs(lit);
            if (lit == 0 || var > n) {
                throw std::invalid_argument("encode: literal " + std::to_string(lit) +
                                            " outside 1.." + std::to_string(n));
            }
        }
    }

    ReductionMap rmap;
    rmap.branch_edges.resize(static_cast<std::size_t>(n));

    if (m == 0) {
        // No clauses means no edges at all: every gadget degenerates and the
        // instance collapses to a single vertex with s = t.
        const std::vector<std::string> only{"s"};
        rmap.graph = build_graph({}, only);
        rmap.source = rmap.sink = 0;
        rmap.gadget_boundaries.assign(static_cast<std::size_t>(n) + 1, rmap.source);
        return rmap;
    }

    std::vector<EdgeTriple> triples;
    triples.reserve(static_cast<std::size_t>(2 * n * m));
    std::vector<std::string> boundary_names;
    boundary_names.reserve(static_cast<std::size_t>(n + m) + 1);
    boundary_names.emplace_back("s");
    for (int j = 1; j <= n; ++j) boundary_names.push_back("v" + std::to_string(j));
    for (int i = 1; i < m; ++i) boundary_names.push_back("c" + std::to_string(i));
    boundary_names.emplace_back("t");

    struct ChainRecord {
        int var;
        bool negated;
        std::size_t first_triple;
    };
    std::vector<ChainRecord> chains;

    for (int j = 1; j <= n; ++j) {
        const std::string& from = boundary_names[static_cast<std::size_t>(j) - 1];
        const std::string& to = boundary_names[static_cast<std::size_t>(j)];
        for (const bool negated : {false, true}) {
            chains.push_back(ChainRecord{j, negated, triples.size()});
            std::string prev = from;
            for (int i = 1; i <= m; ++i) {
                std::string next = i == m ? to
                                          : "x" + std::to_string(j) + (negated ? "n" : "p") +
                                                std::to_string(i);
                triples.push_back(EdgeTriple{prev, next, gadget_label(j, i, negated)});
                prev = std::move(next);
            }
        }
    }
    for (int i = 1; i <= m; ++i) {
        const std::string& from = boundary_names[static_cast<std::size_t>(n + i) - 1];
        const std::string& to = boundary_names[static_cast<std::size_t>(n + i)];
        for (int lit : inst.clauses[static_cast<std::size_t>(i) - 1]) {
            triples.push_back(EdgeTriple{from, to, gadget_label(std::abs(lit), i, lit < 0)});
        }
    }

    rmap.graph = build_graph(triples);
    rmap.source = *rmap.graph.find_vertex("s");
    rmap.sink = *rmap.graph.find_vertex("t");
    for (const std::string& name : boundary_names) {
        rmap.gadget_boundaries.push_back(*rmap.graph.find_vertex(name));
    }
    for (const ChainRecord& chain : chains) {
        auto& edges = chain.negated ? rmap.branch_edges[static_cast<std::size_t>(chain.var) - 1].negative
                                    : rmap.branch_edges[static_cast<std::size_t>(chain.var) - 1].positive;
        for (int i = 0; i < m; ++i) {
            edges.push_back(static_cast<EdgeId>(chain.first_triple + static_cast<std::size_t>(i)));
        }
    }
    return rmap;
}

Assignment decode(const ReductionMap& rmap, const RainbowPath& path) {
    auto revalidated = make_rainbow_path(rmap.graph, path.edges);
    if (!revalidated.has_value()) throw DecodeError("decode: path is not feasible");
    if (path.edges.empty()) {
        if (rmap.source != rmap.sink) throw DecodeError("decode: path does not run from s to t");
    } else {
        const Edge& first = rmap.graph.edge(path.edges.front());
        const Edge& last = rmap.graph.edge(path.edges.back());
        if (first.source != rmap.source || last.target != rmap.sink) {
            throw DecodeError("decode: path does not run from s to t");
        }
    }

    std::map<EdgeId, std::size_t> negative_chain_of;
    for (std::size_t j = 0; j < rmap.branch_edges.size(); ++j) {
        for (EdgeId e : rmap.branch_edges[j].negative) negative_chain_of.emplace(e, j);
    }

    Assignment assignment(rmap.branch_edges.size(), false);
    for (EdgeId e : path.edges) {
        auto it = negative_chain_of.find(e);
        if (it != negative_chain_of.end()) assignment[it->second] = true;
    }
    return assignment;
}

EquivalenceCheck rainbow_iff_sat(const SatInstance& inst) {
    const ReductionMap rmap = encode(inst);
    const SearchResult result =
        alg_a(rmap.graph, rmap.source, TargetSet{rmap.sink}, SearchBudget{});
    EquivalenceCheck check;
    check.spul_feasible = result.targets.at(rmap.sink).status == TargetStatus::kFound;
    check.sat_satisfiable = oracle::sat_brute_force(inst).has_value();
    return check;
}

}  // namespace spul::reduction
