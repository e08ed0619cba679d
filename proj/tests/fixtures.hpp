#pragma once

#include <random>
#include <string>
#include <vector>

#include "spul/cnf.hpp"
#include "spul/graph.hpp"

namespace spul::testing {

// Six-edge instance where the unlabeled shortest path S->A->B->T reuses
// label 1, so the shortest feasible path must detour through C and D.
inline std::vector<EdgeTriple> detour_triples() {
    return {{"S", "A", "1"}, {"A", "B", "2"}, {"B", "T", "1"},
            {"A", "C", "2"}, {"C", "D", "3"}, {"D", "T", "4"}};
}

inline LabeledDigraph detour_graph() { return build_graph(detour_triples()); }

// Two bundles of three parallel edges sharing labels {1,2,3}; every
// label-distinct two-edge combination reaches B.
inline std::vector<EdgeTriple> bundle_triples() {
    return {{"S", "A", "1"}, {"S", "A", "2"}, {"S", "A", "3"},
            {"A", "B", "1"}, {"A", "B", "2"}, {"A", "B", "3"}};
}

inline LabeledDigraph bundle_graph() { return build_graph(bundle_triples()); }

// Random multigraph within the oracle limits. All vertex names are passed
// as extras so isolated vertices occur even when no edge mentions them.
inline LabeledDigraph random_graph(std::mt19937& rng, int max_vertices = 8, int max_edges = 20,
                                   int max_labels = 6) {
    const int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    const int ne = std::uniform_int_distribution<int>(0, max_edges)(rng);
    const int nl = std::uniform_int_distribution<int>(1, max_labels)(rng);
    std::uniform_int_distribution<int> vertex(0, nv - 1);
    std::uniform_int_distribution<int> label(0, nl - 1);
    std::vector<EdgeTriple> triples;
    triples.reserve(static_cast<std::size_t>(ne));
    for (int i = 0; i < ne; ++i) {
        triples.push_back(EdgeTriple{"v" + std::to_string(vertex(rng)),
                                     "v" + std::to_string(vertex(rng)),
                                     "L" + std::to_string(label(rng))});
    }
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));
    return build_graph(triples, names);
}

inline SatInstance random_cnf(std::mt19937& rng, int max_vars = 8, int max_clauses = 6,
                              int max_width = 3) {
    SatInstance inst;
    inst.num_vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
    const int m = std::uniform_int_distribution<int>(0, max_clauses)(rng);
    std::uniform_int_distribution<int> width(1, max_width);
    std::uniform_int_distribution<int> var(1, inst.num_vars);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < m; ++i) {
        std::vector<int> clause;
        const int w = width(rng);
        for (int k = 0; k < w; ++k) clause.push_back(sign(rng) ? var(rng) : -var(rng));
        inst.clauses.push_back(std::move(clause));
    }
    return inst;
}

inline std::vector<std::vector<LabelId>> random_label_sets(std::mt19937& rng, int max_positions = 8,
                                                           int universe = 8) {
    const int positions = std::uniform_int_distribution<int>(0, max_positions)(rng);
    std::uniform_int_distribution<int> size(1, universe);
    std::uniform_int_distribution<int> label(0, universe - 1);
    std::vector<std::vector<LabelId>> sets;
    for (int p = 0; p < positions; ++p) {
        std::vector<LabelId> set;
        const int k = size(rng);
        for (int i = 0; i < k; ++i) {
            const LabelId l = label(rng);
            bool present = false;
            for (LabelId existing : set) present = present || existing == l;
            if (!present) set.push_back(l);
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

}  // namespace spul::testing
