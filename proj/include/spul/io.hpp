#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spul/cnf.hpp"
#include "spul/graph.hpp"
#include "spul/reduction.hpp"
#include "spul/search.hpp"

namespace spul::io {

enum class Severity { kWarning, kError };

struct Diagnostic {
    int line = 0;  // 1-based input line
    Severity severity = Severity::kError;
    std::string message;
};

/// Errors abort parsing; warnings accumulate alongside a usable graph.
struct EdgeListResult {
    LabeledDigraph graph;
    std::vector<Diagnostic> diagnostics;

    bool ok() const {
        for (const Diagnostic& d : diagnostics) {
            if (d.severity == Severity::kError) return false;
        }
        return true;
    }
};

/// Edge-list format: one `source<TAB>target<TAB>label` per line; `#` lines
/// and blank lines ignored; duplicate lines allowed (warning).
EdgeListResult parse_edge_list(std::string_view text);

/// One line per edge in id order; parsing the output reproduces the graph.
std::string write_edge_list(const LabeledDigraph& g);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Standard DIMACS CNF (`p cnf n m`, zero-terminated clauses, `c` comments).
/// Any clause width >= 1 is accepted. Throws ParseError.
SatInstance parse_dimacs(std::string_view text);

enum class OutputFormat { kTsv, kJson };

/// TSV: header plus one line per target,
/// `target  status  spul_distance  bfs_distance  label_sequence  vertex_sequence`
/// with `;`-joined sequences and `-` for absent values, ordered by target
/// vertex id. JSON mirrors the fields plus the run counters.
std::string write_result(const SearchResult& result, const LabeledDigraph& g, OutputFormat format);

struct MapFileChainEdge {
    int var = 0;
    bool negated = false;
    EdgeId edge = kNoEdge;
    std::string source;
    std::string target;
    std::string label;
};

/// Sidecar map data linking gadget chain edges back to variables, enough to
/// decode a solver result without reloading the encoded graph.
struct MapFileData {
    int num_vars = 0;
    int num_clauses = 0;
    std::string source;
    std::string sink;
    std::vector<MapFileChainEdge> chain_edges;
};

std::string write_map_file(const reduction::ReductionMap& rmap);
MapFileData parse_map_file(std::string_view text);  // throws ParseError

}  // namespace spul::io
