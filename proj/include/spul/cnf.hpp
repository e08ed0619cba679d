#pragma once

#include <cstdlib>
#include <vector>

namespace spul {

/// CNF formula over variables x_1..x_n. Literals use the DIMACS convention:
/// +j for x_j, -j for its negation. Clauses are nonempty.
struct SatInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Assignment indexed by variable - 1; true means the variable is set.
using Assignment = std::vector<bool>;

inline bool satisfies(const SatInstance& inst, const Assignment& assignment) {
    for (const auto& clause : inst.clauses) {
        bool clause_true = false;
        for (int lit : clause) {
            const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
            if ((lit > 0) == value) {
                clause_true = true;
                break;
            }
        }
        if (!clause_true) return false;
    }
    return true;
}

}  // namespace spul
