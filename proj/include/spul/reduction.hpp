#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spul/cnf.hpp"
#include "spul/graph.hpp"

namespace spul::reduction {

struct VariableChains {
    std::vector<EdgeId> positive;  // chain edge i carries label "j.i.p"
    std::vector<EdgeId> negative;  // chain edge i carries label "j.i.n"
};

/// CNF formula embedded as a label-constrained path instance: variable
/// gadgets (two parallel label chains each) followed by clause gadgets
/// (parallel edges, one per literal), left to right from s to t.
struct ReductionMap {
    LabeledDigraph graph;
    VertexId source = 0;
    VertexId sink = 0;
    std::vector<VariableChains> branch_edges;  // index j-1 for variable x_j
    std::vector<VertexId> gadget_boundaries;   // n + m + 1 vertices, s first, t last
};

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Label of chain edge i of variable j ("j.i.p" / "j.i.n"); clause edges
/// reuse these strings so a traversed chain blocks exactly the matching
/// literals.
std::string gadget_label(int var, int clause, bool negated);

/// Builds the instance. Taking variable j's positive chain consumes every
/// "j.*.p" label, so only negated literals of x_j stay usable: the positive
/// branch encodes x_j = false. Throws std::invalid_argument on literals
/// outside 1..n or empty clauses.
ReductionMap encode(const SatInstance& inst);

/// Reads the branch choices off a feasible s-t path: x_j is true iff the
/// path uses an edge of variable j's negative chain. Throws DecodeError
/// when the path is not an s-t path or not feasible.
Assignment decode(const ReductionMap& rmap, const RainbowPath& path);

struct EquivalenceCheck {
    bool spul_feasible = false;
    bool sat_satisfiable = false;
};

/// Runs the exact search on the encoded instance and the brute-force SAT
/// oracle on the formula; the two booleans must agree on every input.
EquivalenceCheck rainbow_iff_sat(const SatInstance& inst);

}  // namespace spul::reduction
