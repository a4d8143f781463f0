#pragma once

#include <vector>

#include "graph.hpp"

namespace domenum {

/// Partition of V(G) into irredundant vertices (inclusion-minimal closed
/// neighbourhoods, one per twin class) and redundant ones.
struct RedundancyLabeling {
    VertexSet irredundant;
    VertexSet redundant;
    /// For every vertex x, the smallest irredundant y with N[y] ⊆ N[x]
    /// (x itself when x is irredundant).
    std::vector<vertex_t> twin_representative;

    bool is_irredundant(vertex_t v) const { return irredundant.contains(v); }
};

namespace detail {

// N[a] ⊆ N[b] on sorted adjacency lists.
inline bool closed_nbhd_subset(const Graph& g, vertex_t a, vertex_t b) {
    if (a != b && !g.adjacent(a, b)) {
        return false;
    }
    auto na = g.neighbours(a);
    auto nb = g.neighbours(b);
    auto it = nb.begin();
    for (vertex_t v : na) {
        if (v == b) {
            continue;
        }
        it = std::lower_bound(it, nb.end(), v);
        if (it == nb.end() || *it != v) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Pairwise closed-neighbourhood inclusion; only y in N[x] can satisfy
/// N[y] ⊆ N[x]. Among twins the smallest id is irredundant.
inline RedundancyLabeling classify_redundancy(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> irredundant(n, 1);
    for (vertex_t x = 0; x < n; ++x) {
        for (vertex_t y : g.neighbours(x)) {
            if (!detail::closed_nbhd_subset(g, y, x)) {
                continue;
            }
            bool twins = g.degree(x) == g.degree(y);
            if (!twins || y < x) {
                irredundant[x] = 0;
                break;
            }
        }
    }
    RedundancyLabeling out;
    std::vector<vertex_t> ir;
    std::vector<vertex_t> rn;
    for (vertex_t v = 0; v < n; ++v) {
        (irredundant[v] ? ir : rn).push_back(v);
    }
    out.irredundant = VertexSet(n, std::move(ir));
    out.redundant = VertexSet(n, std::move(rn));
    out.twin_representative.resize(n);
    for (vertex_t x = 0; x < n; ++x) {
        if (irredundant[x]) {
            out.twin_representative[x] = x;
            continue;
        }
        bool found = false;
        for (vertex_t y : g.neighbours(x)) {
            if (irredundant[y] && detail::closed_nbhd_subset(g, y, x)) {
                out.twin_representative[x] = y;
                found = true;
                break;
            }
        }
        if (!found) {
            throw contract_violation("redundant vertex without irredundant representative");
        }
    }
    return out;
}

/// The edges that turn RN(G) into a clique (non-edges of G only).
inline std::vector<Edge> completion_edges(const Graph& g, const RedundancyLabeling& labels) {
    std::vector<Edge> added;
    const auto& rn = labels.redundant;
    for (std::size_t i = 0; i < rn.size(); ++i) {
        for (std::size_t j = i + 1; j < rn.size(); ++j) {
            if (!g.adjacent(rn[i], rn[j])) {
                added.emplace_back(rn[i], rn[j]);
            }
        }
    }
    return added;
}

/// G_co: G plus a clique on the redundant vertices. Same minimal dominating sets as G.
inline Graph completion_graph(const Graph& g) {
    auto added = completion_edges(g, classify_redundancy(g));
    return with_added_edges(g, added);
}

/// The irredundancy criterion for a non-edge e: true iff e meets IR(G).
/// It predicts exactly when adding e changes the minimal dominating sets
/// only if the irredundant endpoint has no closed twin. With a twin (2K2
/// plus any edge) the twin keeps the old neighbourhood and nothing changes.
inline bool check_completion_optimality(const Graph& g, Edge e) {
    g.check_vertex(e.first);
    g.check_vertex(e.second);
    if (e.first == e.second || g.adjacent(e.first, e.second)) {
        throw invalid_edge("pair is not a non-edge of the graph");
    }
    auto labels = classify_redundancy(g);
    return labels.is_irredundant(e.first) || labels.is_irredundant(e.second);
}

} // namespace domenum
