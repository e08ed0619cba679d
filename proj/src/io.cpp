#include "spul/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace spul::io {

namespace {

// Calls fn(line_number, line) for every line; the final newline does not
// open an extra empty line. A trailing carriage return is dropped so CRLF
// input does not leak \r into names.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (line.ends_with('\r')) line.remove_suffix(1);
        fn(++line_number, line);
        start = end + 1;
    }
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = line.find(sep, start);
        if (end == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

}  // namespace

EdgeListResult parse_edge_list(std::string_view text) {
    EdgeListResult result;
    std::vector<EdgeTriple> triples;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    bool failed = false;
    for_each_line(text, [&](int line, std::string_view content) {
        if (failed || is_blank(content) || content.starts_with('#')) return;
        const auto fields = split(content, '\t');
        if (fields.size() != 3) {
            result.diagnostics.push_back(
                {line, Severity::kError,
                 "expected 3 tab-separated fields, got " + std::to_string(fields.size())});
            failed = true;
            return;
        }
        for (std::string_view field : fields) {
            if (field.empty()) {
                result.diagnostics.push_back({line, Severity::kError, "empty field"});
                failed = true;
                return;
            }
        }
        EdgeTriple triple{std::string(fields[0]), std::string(fields[1]), std::string(fields[2])};
        if (!seen.emplace(triple.source, triple.target, triple.label).second) {
            result.diagnostics.push_back({line, Severity::kWarning, "duplicate edge"});
        }
        triples.push_back(std::move(triple));
    });
    if (!failed) result.graph = build_graph(triples);
    return result;
}

std::string write_edge_list(const LabeledDigraph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += g.vertex_name(e.source);
        out += '\t';
        out += g.vertex_name(e.target);
        out += '\t';
        out += g.label_name(e.label);
        out += '\n';
    }
    return out;
}

SatInstance parse_dimacs(std::string_view text) {
    SatInstance inst;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> pending;
    int last_line = 1;

    for_each_line(text, [&](int line, std::string_view content) {
        last_line = line;
        if (is_blank(content) || content.starts_with('c')) return;
        std::istringstream tokens{std::string(content)};
        std::string token;
        while (tokens >> token) {
            if (token == "p") {
                if (have_header) throw ParseError(line, "duplicate header");
                std::string format;
                if (!(tokens >> format >> inst.num_vars >> declared_clauses) || format != "cnf") {
                    throw ParseError(line, "malformed header, expected `p cnf <vars> <clauses>`");
                }
                if (inst.num_vars < 0 || declared_clauses < 0) {
                    throw ParseError(line, "negative counts in header");
                }
                have_header = true;
                continue;
            }
            if (!have_header) throw ParseError(line, "missing `p cnf` header");
            int lit = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError(line, "expected integer literal, got `" + token + "`");
            }
            if (lit == 0) {
                if (pending.empty()) throw ParseError(line, "empty clause");
                inst.clauses.push_back(std::move(pending));
                pending.clear();
                continue;
            }
            if (std::abs(lit) > inst.num_vars) {
                throw ParseError(line, "literal " + std::to_string(lit) + " out of range 1.." +
                                           std::to_string(inst.num_vars));
            }
            pending.push_back(lit);
        }
    });
    if (!pending.empty()) throw ParseError(last_line, "unterminated clause (missing trailing 0)");
    if (!have_header) throw ParseError(1, "missing `p cnf` header");
    return inst;
}

namespace {

const char* status_string(TargetStatus status) {
    switch (status) {
        case TargetStatus::kFound: return "found";
        case TargetStatus::kUnreachable: return "unreachable";
        case TargetStatus::kNotFound: return "not-found";
    }
    return "not-found";
}

std::string join_labels(const LabeledDigraph& g, const RainbowPath& path) {
    std::string out;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        if (i > 0) out += ';';
        out += g.label_name(g.edge(path.edges[i]).label);
    }
    return out;
}

std::string join_vertices(const LabeledDigraph& g, VertexId start, const RainbowPath& path) {
    std::string out = g.vertex_name(start);
    for (EdgeId e : path.edges) {
        out += ';';
        out += g.vertex_name(g.edge(e).target);
    }
    return out;
}

}  // namespace

std::string write_result(const SearchResult& result, const LabeledDigraph& g, OutputFormat format) {
    if (format == OutputFormat::kTsv) {
        std::string out =
            "target\tstatus\tspul_distance\tbfs_distance\tlabel_sequence\tvertex_sequence\n";
        for (const auto& [v, outcome] : result.targets) {
            out += g.vertex_name(v);
            out += '\t';
            out += status_string(outcome.status);
            out += '\t';
            out += outcome.status == TargetStatus::kFound ? std::to_string(outcome.spul_distance) : "-";
            out += '\t';
            out += outcome.bfs_distance >= 0 ? std::to_string(outcome.bfs_distance) : "-";
            out += '\t';
            if (outcome.status == TargetStatus::kFound) {
                out += join_labels(g, outcome.witness);
                out += '\t';
                out += join_vertices(g, result.source, outcome.witness);
            } else {
                out += "-\t-";
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json doc;
    doc["source"] = g.vertex_name(result.source);
    doc["counters"] = {{"nodes_allocated", result.stats.nodes_allocated},
                       {"paths_found", result.stats.paths_found},
                       {"aborted", result.stats.aborted}};
    doc["targets"] = nlohmann::ordered_json::array();
    for (const auto& [v, outcome] : result.targets) {
        nlohmann::ordered_json row;
        row["target"] = g.vertex_name(v);
        row["status"] = status_string(outcome.status);
        if (outcome.status == TargetStatus::kFound) {
            row["spul_distance"] = outcome.spul_distance;
        } else {
            row["spul_distance"] = nullptr;
        }
        if (outcome.bfs_distance >= 0) {
            row["bfs_distance"] = outcome.bfs_distance;
        } else {
            row["bfs_distance"] = nullptr;
        }
        if (outcome.status == TargetStatus::kFound) {
            auto labels = nlohmann::ordered_json::array();
            for (EdgeId e : outcome.witness.edges) labels.push_back(g.label_name(g.edge(e).label));
            auto vertices = nlohmann::ordered_json::array();
            vertices.push_back(g.vertex_name(result.source));
            for (EdgeId e : outcome.witness.edges) vertices.push_back(g.vertex_name(g.edge(e).target));
            row["labels"] = std::move(labels);
            row["vertices"] = std::move(vertices);
        } else {
            row["labels"] = nullptr;
            row["vertices"] = nullptr;
        }
        doc["targets"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string write_map_file(const reduction::ReductionMap& rmap) {
    const LabeledDigraph& g = rmap.graph;
    const int n = static_cast<int>(rmap.branch_edges.size());
    const int m = static_cast<int>(rmap.gadget_boundaries.size()) - n - 1;
    std::string out = "# spul reduction map\n";
    out += "vars " + std::to_string(n) + "\n";
    out += "clauses " + std::to_string(m) + "\n";
    out += "source " + g.vertex_name(rmap.source) + "\n";
    out += "sink " + g.vertex_name(rmap.sink) + "\n";
    for (int j = 1; j <= n; ++j) {
        const auto& chains = rmap.branch_edges[static_cast<std::size_t>(j) - 1];
        for (const bool negated : {false, true}) {
            for (EdgeId e : negated ? chains.negative : chains.positive) {
                const Edge& edge = g.edge(e);
                out += "chain " + std::to_string(j) + (negated ? " n " : " p ") +
                       std::to_string(e) + " " + g.vertex_name(edge.source) + " " +
                       g.vertex_name(edge.target) + " " + g.label_name(edge.label) + "\n";
            }
        }
    }
    return out;
}

MapFileData parse_map_file(std::string_view text) {
    MapFileData data;
    bool have_vars = false;
    bool have_source = false;
    bool have_sink = false;
    for_each_line(text, [&](int line, std::string_view content) {
        if (is_blank(content) || content.starts_with('#')) return;
        std::istringstream tokens{std::string(content)};
        std::string key;
        tokens >> key;
        if (key == "vars") {
            if (!(tokens >> data.num_vars)) throw ParseError(line, "malformed vars line");
            have_vars = true;
        } else if (key == "clauses") {
            if (!(tokens >> data.num_clauses)) throw ParseError(line, "malformed clauses line");
        } else if (key == "source") {
            if (!(tokens >> data.source)) throw ParseError(line, "malformed source line");
            have_source = true;
        } else if (key == "sink") {
            if (!(tokens >> data.sink)) throw ParseError(line, "malformed sink line");
            have_sink = true;
        } else if (key == "chain") {
            MapFileChainEdge edge;
            std::string branch;
            if (!(tokens >> edge.var >> branch >> edge.edge >> edge.source >> edge.target >>
                  edge.label) ||
                (branch != "p" && branch != "n")) {
                throw ParseError(line, "malformed chain line");
            }
            edge.negated = branch == "n";
            data.chain_edges.push_back(std::move(edge));
        } else {
            throw ParseError(line, "unknown key `" + key + "`");
        }
    });
    if (!have_vars || !have_source || !have_sink) {
        throw ParseError(1, "map file missing vars/source/sink");
    }
    return data;
}

}  // namespace spul::io
