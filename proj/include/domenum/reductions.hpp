#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "stream.hpp"

namespace domenum {

/// Vertex roles in an incidence graph. Layout: ground copies occupy
/// 0..ground_count-1, the vertex of edge i is ground_count+i, the apex (only
/// in the co-bipartite construction) is last.
struct IncidenceLabels {
    enum class Role { ground, edge, apex };

    std::size_t ground_count = 0;
    std::vector<vertex_t> edge_vertices;
    std::optional<vertex_t> apex;

    std::size_t vertex_count() const noexcept { return ground_count + edge_vertices.size() + (apex ? 1 : 0); }

    Role role(vertex_t v) const {
        if (v < ground_count) {
            return Role::ground;
        }
        if (v < ground_count + edge_vertices.size()) {
            return Role::edge;
        }
        if (apex && v == *apex) {
            return Role::apex;
        }
        throw invalid_vertex("vertex " + std::to_string(v) + " outside incidence graph");
    }

    std::size_t edge_index(vertex_t v) const {
        if (role(v) != Role::edge) {
            throw invalid_vertex("vertex " + std::to_string(v) + " is not an edge vertex");
        }
        return v - ground_count;
    }
};

struct IncidenceGraph {
    Graph graph;
    IncidenceLabels labels;
};

/// N(G): one hyperedge N[x] per vertex, in vertex order, duplicates kept.
inline Hypergraph closed_neighbourhood_hypergraph(const Graph& g) {
    std::vector<VertexSet> edges;
    edges.reserve(g.vertex_count());
    for (vertex_t x = 0; x < g.vertex_count(); ++x) {
        edges.push_back(closed_neighbourhood(g, x));
    }
    return Hypergraph(g.vertex_count(), std::move(edges));
}

/// N_o(G): one hyperedge N(x) per vertex. An isolated vertex would give an
/// empty hyperedge, so it is rejected.
inline Hypergraph open_neighbourhood_hypergraph(const Graph& g) {
    std::vector<VertexSet> edges;
    edges.reserve(g.vertex_count());
    for (vertex_t x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) == 0) {
            throw no_total_dominating_set("vertex " + std::to_string(x) + " is isolated", {x});
        }
        edges.push_back(open_neighbourhood(g, x));
    }
    return Hypergraph(g.vertex_count(), std::move(edges));
}

namespace detail {

inline IncidenceLabels incidence_layout(const Hypergraph& h, bool with_apex) {
    IncidenceLabels labels;
    labels.ground_count = h.ground_size();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        labels.edge_vertices.push_back(static_cast<vertex_t>(h.ground_size() + i));
    }
    if (with_apex) {
        labels.apex = static_cast<vertex_t>(h.ground_size() + h.edge_count());
    }
    return labels;
}

inline std::vector<Edge> incidence_edges(const Hypergraph& h, const IncidenceLabels& labels) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (vertex_t x : h.edge(i)) {
            edges.emplace_back(x, labels.edge_vertices[i]);
        }
    }
    return edges;
}

inline void add_clique(std::vector<Edge>& edges, vertex_t first, vertex_t last) {
    for (vertex_t u = first; u < last; ++u) {
        for (vertex_t v = u + 1; v < last; ++v) {
            edges.emplace_back(u, v);
        }
    }
}

} // namespace detail

/// I(H): ground vertices on one side, one vertex per hyperedge on the other,
/// x ~ y_e iff x is in e.
inline IncidenceGraph bipartite_incidence(const Hypergraph& h) {
    auto labels = detail::incidence_layout(h, false);
    auto edges = detail::incidence_edges(h, labels);
    return {Graph(labels.vertex_count(), edges), std::move(labels)};
}

/// I'(H): I(H) with the ground side turned into a clique. Always split.
inline IncidenceGraph split_incidence(const Hypergraph& h) {
    auto labels = detail::incidence_layout(h, false);
    auto edges = detail::incidence_edges(h, labels);
    detail::add_clique(edges, 0, static_cast<vertex_t>(h.ground_size()));
    return {Graph(labels.vertex_count(), edges), std::move(labels)};
}

/// B(H): I(H) with both sides turned into cliques plus an apex adjacent to
/// exactly the ground side. Requires at least one non-empty hyperedge.
inline IncidenceGraph cobipartite_incidence(const Hypergraph& h) {
    bool any = false;
    for (const auto& e : h.edges()) {
        any = any || !e.empty();
    }
    if (!any) {
        throw degenerate_input("co-bipartite incidence graph needs a non-empty hyperedge");
    }
    auto labels = detail::incidence_layout(h, true);
    auto edges = detail::incidence_edges(h, labels);
    const auto ground = static_cast<vertex_t>(h.ground_size());
    const auto edge_end = static_cast<vertex_t>(h.ground_size() + h.edge_count());
    detail::add_clique(edges, 0, ground);
    detail::add_clique(edges, ground, edge_end);
    for (vertex_t x = 0; x < ground; ++x) {
        edges.emplace_back(x, *labels.apex);
    }
    return {Graph(labels.vertex_count(), edges), std::move(labels)};
}

/// (C(G), {N(s) | s in S(G)}): ground vertex i is p.clique[i]. An independent
/// vertex with no neighbour contributes an empty hyperedge.
inline Hypergraph split_graph_to_hypergraph(const Graph& g, const SplitPartition& p) {
    if (auto defect = split_partition_defect(g, p, false); !defect.empty()) {
        throw invalid_partition(defect);
    }
    std::vector<vertex_t> local(g.vertex_count(), 0);
    for (std::size_t i = 0; i < p.clique.size(); ++i) {
        local[p.clique[i]] = static_cast<vertex_t>(i);
    }
    std::vector<VertexSet> edges;
    for (vertex_t s : p.independent) {
        std::vector<vertex_t> e;
        for (vertex_t c : g.neighbours(s)) {
            e.push_back(local[c]);
        }
        edges.emplace_back(p.clique.size(), std::move(e));
    }
    return Hypergraph(p.clique.size(), std::move(edges), true);
}

/// Turns minimal dominating sets of B(H) into minimal transversals of H.
/// Sets inside the ground range pass through (relabelled to the ground
/// universe); pairs {x, y_e} with x a ground vertex or the apex are dropped.
/// Anything else is a contract violation.
class TransversalFilter {
public:
    explicit TransversalFilter(const Hypergraph& h) : labels_(detail::incidence_layout(h, true)) {}

    std::optional<VertexSet> operator()(const VertexSet& d) {
        using Role = IncidenceLabels::Role;
        if (d.empty() || d.back() < labels_.ground_count) {
            return d.with_universe(labels_.ground_count);
        }
        if (d.size() == 2 && labels_.role(d[1]) == Role::edge &&
            (labels_.role(d[0]) == Role::ground || labels_.role(d[0]) == Role::apex)) {
            dropped_.push_back(d);
            return std::nullopt;
        }
        if (d.size() == 2 && labels_.role(d[0]) == Role::edge && labels_.role(d[1]) == Role::apex) {
            dropped_.push_back(d);
            return std::nullopt;
        }
        std::string shown;
        for (vertex_t v : d) {
            shown += (shown.empty() ? "" : " ") + std::to_string(v);
        }
        throw contract_violation("set {" + shown + "} is neither a ground set nor an {x, y_e} pair");
    }

    std::size_t dropped_count() const noexcept { return dropped_.size(); }
    const Family& dropped() const noexcept { return dropped_; }
    const IncidenceLabels& labels() const noexcept { return labels_; }

private:
    IncidenceLabels labels_;
    Family dropped_;
};

inline Family filter_bdom_to_transversals(const Hypergraph& h, const Family& dsets,
                                          std::size_t* dropped = nullptr) {
    TransversalFilter filter(h);
    Family out;
    for (const auto& d : dsets) {
        if (auto t = filter(d)) {
            out.push_back(std::move(*t));
        }
    }
    if (dropped) {
        *dropped = filter.dropped_count();
    }
    return out;
}

} // namespace domenum
