#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spul/cnf.hpp"
#include "spul/graph.hpp"

namespace spul::oracle {

/// Enumeration is exponential by design; inputs above these limits are refused.
struct OracleLimits {
    int max_vertices = 8;
    int max_edges = 20;
    int max_labels = 6;
};

class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RainbowCount {
    int distance = 0;
    std::int64_t optimal_paths = 0;
};

/// Exhaustively enumerates every edge sequence from s with pairwise-distinct
/// labels (vertices may repeat) and returns, per reached vertex, the minimum
/// length and the number of distinct optimal sequences. Ground truth for the
/// search algorithms on small instances.
std::map<VertexId, RainbowCount> enumerate_rainbow(const LabeledDigraph& g, VertexId s,
                                                   const OracleLimits& limits = {});

/// Maximum-bipartite-matching decision for the SDR problem: true iff a
/// matching of positions to labels saturates every position. Cross-check
/// for the backtracking used inside the compressed search.
bool sdr_matching(const std::vector<std::vector<LabelId>>& sets);

/// Tries all 2^n assignments in lexicographic order (x_1 most significant,
/// false < true); returns the first satisfying one. Refuses n > 20.
std::optional<Assignment> sat_brute_force(const SatInstance& inst);

}  // namespace spul::oracle
