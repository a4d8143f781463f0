#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace domenum {

using Edge = std::pair<vertex_t, vertex_t>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; the mutating operations return new graphs.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adjacency_(n) {}

    /// Duplicate edges (in either orientation) collapse; loops throw invalid_edge.
    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        for (auto [u, v] : edges) {
            check_vertex(u);
            check_vertex(v);
            if (u == v) {
                throw invalid_edge("self-loop on vertex " + std::to_string(u));
            }
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        normalize();
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const vertex_t> neighbours(vertex_t v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    std::size_t degree(vertex_t v) const { return neighbours(v).size(); }

    bool adjacent(vertex_t u, vertex_t v) const {
        auto nb = neighbours(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Edges as (u, v) pairs with u < v, ordered lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (vertex_t u = 0; u < adjacency_.size(); ++u) {
            for (vertex_t v : adjacency_[u]) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    void check_vertex(vertex_t v) const {
        if (v >= adjacency_.size()) {
            throw invalid_vertex("vertex " + std::to_string(v) + " out of range for graph of order " +
                                 std::to_string(adjacency_.size()));
        }
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void normalize() {
        edge_count_ = 0;
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            edge_count_ += list.size();
        }
        edge_count_ /= 2;
    }

    std::vector<std::vector<vertex_t>> adjacency_;
    std::size_t edge_count_ = 0;
};

inline VertexSet open_neighbourhood(const Graph& g, vertex_t x) {
    auto nb = g.neighbours(x);
    return VertexSet(g.vertex_count(), std::vector<vertex_t>(nb.begin(), nb.end()));
}

inline VertexSet closed_neighbourhood(const Graph& g, vertex_t x) {
    auto nb = g.neighbours(x);
    std::vector<vertex_t> ids;
    ids.reserve(nb.size() + 1);
    auto split = std::lower_bound(nb.begin(), nb.end(), x);
    ids.insert(ids.end(), nb.begin(), split);
    ids.push_back(x);
    ids.insert(ids.end(), split, nb.end());
    return VertexSet(g.vertex_count(), std::move(ids));
}

/// N[X]: union of closed neighbourhoods.
inline VertexSet closed_neighbourhood_of_set(const Graph& g, const VertexSet& xs) {
    std::vector<char> mark(g.vertex_count(), 0);
    for (vertex_t x : xs) {
        mark[x] = 1;
        for (vertex_t y : g.neighbours(x)) {
            mark[y] = 1;
        }
    }
    std::vector<vertex_t> ids;
    for (vertex_t v = 0; v < mark.size(); ++v) {
        if (mark[v]) {
            ids.push_back(v);
        }
    }
    return VertexSet(g.vertex_count(), std::move(ids));
}

/// N(X) = N[X] \ X.
inline VertexSet open_neighbourhood_of_set(const Graph& g, const VertexSet& xs) {
    return set_difference(closed_neighbourhood_of_set(g, xs), xs);
}

namespace detail {

// Components of the subgraph induced by the vertices with blocked[v] == 0.
// Each component is sorted; components are ordered by minimum member.
inline std::vector<std::vector<vertex_t>> components_avoiding(const Graph& g, const std::vector<char>& blocked) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(blocked.begin(), blocked.end());
    std::vector<std::vector<vertex_t>> out;
    std::vector<vertex_t> stack;
    for (vertex_t s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<vertex_t> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            vertex_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (vertex_t w : g.neighbours(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace detail

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    for (auto& comp : detail::components_avoiding(g, std::vector<char>(g.vertex_count(), 0))) {
        out.emplace_back(g.vertex_count(), std::move(comp));
    }
    return out;
}

/// True for the empty graph as well.
inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_complete(const Graph& g) {
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - (n ? 1 : 0)) / 2;
}

/// Copy of g with `edges` added; existing edges are ignored.
inline Graph with_added_edges(const Graph& g, std::span<const Edge> edges) {
    std::vector<Edge> all = g.edges();
    for (auto [u, v] : edges) {
        if (u == v) {
            throw invalid_edge("cannot add self-loop on vertex " + std::to_string(u));
        }
        all.emplace_back(u, v);
    }
    return Graph(g.vertex_count(), all);
}

inline Graph complement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u) {
        auto nb = g.neighbours(u);
        auto it = std::upper_bound(nb.begin(), nb.end(), u);
        for (vertex_t v = u + 1; v < n; ++v) {
            if (it != nb.end() && *it == v) {
                ++it;
            } else {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

struct InducedSubgraph {
    Graph graph;
    /// Vertex i of `graph` is `to_parent[i]` in the host graph.
    std::vector<vertex_t> to_parent;
};

/// G[X], relabelled 0..|X|-1 in increasing order of the host ids.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& xs) {
    std::vector<vertex_t> local(g.vertex_count(), static_cast<vertex_t>(-1));
    std::vector<vertex_t> to_parent(xs.begin(), xs.end());
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        g.check_vertex(to_parent[i]);
        local[to_parent[i]] = static_cast<vertex_t>(i);
    }
    std::vector<Edge> edges;
    for (vertex_t u : xs) {
        for (vertex_t v : g.neighbours(u)) {
            if (u < v && local[v] != static_cast<vertex_t>(-1)) {
                edges.emplace_back(local[u], local[v]);
            }
        }
    }
    return {Graph(to_parent.size(), edges), std::move(to_parent)};
}

} // namespace domenum
