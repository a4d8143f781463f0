#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "hypergraph.hpp"
#include "reductions.hpp"

// Text formats. External ids are 1-based; everything in memory is 0-based.
//
//   graph:        p graph <n> <m>      then m lines   e <u> <v>
//   hypergraph:   p hg <n> <m>         then m lines   h <v1> ... <vk>
//   permutation:  n lines, each a distinct id; line i holds the vertex of rank i
//
// Lines starting with '#' and blank lines are ignored everywhere.

namespace domenum::io {

namespace detail {

struct LineReader {
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next significant line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number;
            std::istringstream ss(line);
            tokens.clear();
            for (std::string tok; ss >> tok;) {
                tokens.push_back(tok);
            }
            if (!tokens.empty() && tokens.front()[0] != '#') {
                return true;
            }
        }
        return false;
    }

    std::size_t number = 0;

private:
    std::istream& in_;
};

inline std::size_t parse_count(const std::string& tok, std::size_t line, std::string_view what) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty() || tok[0] == '-' || tok[0] == '+') {
        throw parse_error(line, "malformed " + std::string(what) + " '" + tok + "'");
    }
    return static_cast<std::size_t>(value);
}

inline vertex_t parse_id(const std::string& tok, std::size_t n, std::size_t line) {
    std::size_t id = parse_count(tok, line, "vertex id");
    if (id < 1 || id > n) {
        throw parse_error(line, "vertex id " + tok + " out of range 1.." + std::to_string(n));
    }
    return static_cast<vertex_t>(id - 1);
}

inline std::pair<std::size_t, std::size_t> parse_header(LineReader& reader, std::string_view kind) {
    std::vector<std::string> tokens;
    if (!reader.next(tokens)) {
        throw parse_error(reader.number, "missing 'p " + std::string(kind) + "' header");
    }
    if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != kind) {
        throw parse_error(reader.number, "expected header 'p " + std::string(kind) + " <n> <m>'");
    }
    return {parse_count(tokens[2], reader.number, "vertex count"), parse_count(tokens[3], reader.number, "edge count")};
}

} // namespace detail

/// Reads a graph. Self-loops, out-of-range ids, duplicate edges and a wrong
/// edge count are parse errors carrying the offending line number.
inline Graph parse_graph(std::istream& in) {
    detail::LineReader reader(in);
    auto [n, m] = detail::parse_header(reader, "graph");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        const std::size_t line = reader.number;
        if (tokens[0] != "e" || tokens.size() != 3) {
            throw parse_error(line, "expected 'e <u> <v>'");
        }
        if (edges.size() == m) {
            throw parse_error(line, "more edge lines than the header's " + std::to_string(m));
        }
        vertex_t u = detail::parse_id(tokens[1], n, line);
        vertex_t v = detail::parse_id(tokens[2], n, line);
        if (u == v) {
            throw parse_error(line, "self-loop on vertex " + tokens[1]);
        }
        Edge key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw parse_error(line, "duplicate edge " + tokens[1] + " " + tokens[2]);
        }
        edges.push_back(key);
    }
    if (edges.size() != m) {
        throw parse_error(reader.number, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph(n, edges);
}

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

/// Reads a hypergraph. Empty hyperedges ('h' alone) need `allow_empty_edges`.
inline Hypergraph parse_hypergraph(std::istream& in, bool allow_empty_edges = false) {
    detail::LineReader reader(in);
    auto [n, m] = detail::parse_header(reader, "hg");
    std::vector<VertexSet> edges;
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        const std::size_t line = reader.number;
        if (tokens[0] != "h") {
            throw parse_error(line, "expected 'h <v1> ... <vk>'");
        }
        if (edges.size() == m) {
            throw parse_error(line, "more hyperedge lines than the header's " + std::to_string(m));
        }
        if (tokens.size() == 1 && !allow_empty_edges) {
            throw parse_error(line, "empty hyperedge");
        }
        std::vector<vertex_t> ids;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            ids.push_back(detail::parse_id(tokens[i], n, line));
        }
        VertexSet e(n, ids);
        if (e.size() != ids.size()) {
            throw parse_error(line, "repeated vertex in hyperedge");
        }
        edges.push_back(std::move(e));
    }
    if (edges.size() != m) {
        throw parse_error(reader.number,
                          "expected " + std::to_string(m) + " hyperedges, found " + std::to_string(edges.size()));
    }
    return Hypergraph(n, std::move(edges), allow_empty_edges);
}

inline Hypergraph parse_hypergraph(std::string_view text, bool allow_empty_edges = false) {
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in, allow_empty_edges);
}

/// Reads an order on n vertices: the sequence of 0-based vertices by rank.
inline std::vector<vertex_t> parse_permutation(std::istream& in, std::size_t n) {
    detail::LineReader reader(in);
    std::vector<vertex_t> seq;
    std::vector<char> used(n, 0);
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        if (tokens.size() != 1) {
            throw parse_error(reader.number, "expected one vertex id per line");
        }
        vertex_t v = detail::parse_id(tokens[0], n, reader.number);
        if (used[v]) {
            throw parse_error(reader.number, "vertex " + tokens[0] + " listed twice");
        }
        used[v] = 1;
        seq.push_back(v);
    }
    if (seq.size() != n) {
        throw parse_error(reader.number, "expected " + std::to_string(n) + " ids, found " + std::to_string(seq.size()));
    }
    return seq;
}

/// "1 4": ascending 1-based ids separated by single spaces.
inline std::string format_set(const VertexSet& s) {
    std::string out;
    for (vertex_t v : s) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(v + 1);
    }
    return out;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "p hg " << h.ground_size() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        out << 'h';
        for (vertex_t v : e) {
            out << ' ' << v + 1;
        }
        out << '\n';
    }
}

/// One comment line per vertex of an incidence graph naming its role.
inline void write_labels(std::ostream& out, const IncidenceLabels& labels) {
    for (std::size_t i = 0; i < labels.ground_count; ++i) {
        out << "# vertex " << i + 1 << " ground " << i + 1 << '\n';
    }
    for (std::size_t i = 0; i < labels.edge_vertices.size(); ++i) {
        out << "# vertex " << labels.edge_vertices[i] + 1 << " edge " << i + 1 << '\n';
    }
    if (labels.apex) {
        out << "# vertex " << *labels.apex + 1 << " apex\n";
    }
}

} // namespace domenum::io
