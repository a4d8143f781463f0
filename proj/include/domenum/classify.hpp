#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace domenum {

/// Clique/independent bipartition of a split graph. The independent side is
/// maximal: every clique vertex has a neighbour in it.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;

    friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

/// Checks cover, disjointness, clique/independence and (optionally) maximality
/// of the independent side. Returns an explanation on failure, empty on success.
inline std::string split_partition_defect(const Graph& g, const SplitPartition& p, bool require_maximal = true) {
    const std::size_t n = g.vertex_count();
    if (p.clique.size() + p.independent.size() != n || set_union(p.clique, p.independent).size() != n) {
        return "clique and independent side do not partition the vertex set";
    }
    if (!p.clique.empty() && p.clique.back() >= n) {
        return "clique vertex out of range";
    }
    if (!p.independent.empty() && p.independent.back() >= n) {
        return "independent vertex out of range";
    }
    for (std::size_t i = 0; i < p.clique.size(); ++i) {
        if (g.degree(p.clique[i]) + 1 < p.clique.size()) {
            return "clique side is not complete";
        }
        for (std::size_t j = i + 1; j < p.clique.size(); ++j) {
            if (!g.adjacent(p.clique[i], p.clique[j])) {
                return "clique side is not complete";
            }
        }
    }
    for (vertex_t s : p.independent) {
        for (vertex_t w : g.neighbours(s)) {
            if (p.independent.contains(w)) {
                return "independent side contains an edge";
            }
        }
    }
    if (require_maximal) {
        for (vertex_t c : p.clique) {
            auto nb = g.neighbours(c);
            bool has = std::any_of(nb.begin(), nb.end(), [&](vertex_t w) { return p.independent.contains(w); });
            if (!has) {
                return "independent side is not maximal";
            }
        }
    }
    return {};
}

/// Split recognition from the degree sequence (Hammer-Simeone), followed by
/// the maximality fixpoint on the independent side. Empty if g is not split.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<vertex_t> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); });

    std::size_t k = 0;  // max i (1-based) with d_i >= i - 1
    for (std::size_t i = 1; i <= n; ++i) {
        if (g.degree(by_degree[i - 1]) + 1 >= i) {
            k = i;
        }
    }
    std::size_t head = 0;
    std::size_t tail = 0;
    for (std::size_t i = 0; i < n; ++i) {
        (i < k ? head : tail) += g.degree(by_degree[i]);
    }
    if (head != k * (k - (k ? 1 : 0)) + tail) {
        return std::nullopt;
    }

    std::vector<char> in_clique(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
        in_clique[by_degree[i]] = 1;
    }
    // A clique vertex without independent neighbours moves across. After one
    // move every remaining clique vertex sees it, so the fixpoint is reached.
    for (vertex_t c = 0; c < n; ++c) {
        if (!in_clique[c]) {
            continue;
        }
        auto nb = g.neighbours(c);
        if (std::none_of(nb.begin(), nb.end(), [&](vertex_t w) { return !in_clique[w]; })) {
            in_clique[c] = 0;
            break;
        }
    }
    std::vector<vertex_t> clique;
    std::vector<vertex_t> independent;
    for (vertex_t v = 0; v < n; ++v) {
        (in_clique[v] ? clique : independent).push_back(v);
    }
    SplitPartition p{VertexSet(n, std::move(clique)), VertexSet(n, std::move(independent))};
    if (auto defect = split_partition_defect(g, p); !defect.empty()) {
        throw contract_violation("split recognition produced an invalid partition: " + defect);
    }
    return p;
}

/// An induced 2K2 (4 vertices, edges 0-1 and 2-3), C4 or C5 (vertices in
/// cycle order), or empty when g is split.
inline std::vector<vertex_t> split_obstruction(const Graph& g) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                continue;
            }
            bool ac = g.adjacent(a, c), ad = g.adjacent(a, d), bc = g.adjacent(b, c), bd = g.adjacent(b, d);
            if (!ac && !ad && !bc && !bd) {
                return {a, b, c, d};
            }
            if (ac && bd && !ad && !bc) {
                return {a, b, d, c};
            }
            if (ad && bc && !ac && !bd) {
                return {a, b, c, d};
            }
        }
    }
    const std::size_t n = g.vertex_count();
    for (vertex_t v1 = 0; v1 < n; ++v1) {
        for (vertex_t v0 : g.neighbours(v1)) {
            for (vertex_t v2 : g.neighbours(v1)) {
                if (v2 == v0 || g.adjacent(v0, v2)) {
                    continue;
                }
                for (vertex_t v3 : g.neighbours(v2)) {
                    if (v3 == v1 || v3 == v0 || g.adjacent(v3, v1) || g.adjacent(v3, v0)) {
                        continue;
                    }
                    for (vertex_t v4 : g.neighbours(v3)) {
                        if (v4 != v2 && g.adjacent(v4, v0) && !g.adjacent(v4, v1) && !g.adjacent(v4, v2)) {
                            return {v0, v1, v2, v3, v4};
                        }
                    }
                }
            }
        }
    }
    return {};
}

/// Lexicographic breadth-first search by partition refinement; ties go to the
/// smallest id. Returns the visit order.
inline std::vector<vertex_t> lex_bfs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<vertex_t>> classes;
    if (n) {
        classes.emplace_back(n);
        std::iota(classes.front().begin(), classes.front().end(), 0);
    }
    std::vector<vertex_t> order;
    order.reserve(n);
    std::vector<char> is_nb(n, 0);
    while (!classes.empty()) {
        vertex_t v = classes.front().front();
        classes.front().erase(classes.front().begin());
        order.push_back(v);
        for (vertex_t w : g.neighbours(v)) {
            is_nb[w] = 1;
        }
        std::vector<std::vector<vertex_t>> refined;
        for (auto& cls : classes) {
            std::vector<vertex_t> in;
            std::vector<vertex_t> out;
            for (vertex_t w : cls) {
                (is_nb[w] ? in : out).push_back(w);
            }
            if (!in.empty()) {
                refined.push_back(std::move(in));
            }
            if (!out.empty()) {
                refined.push_back(std::move(out));
            }
        }
        classes = std::move(refined);
        for (vertex_t w : g.neighbours(v)) {
            is_nb[w] = 0;
        }
    }
    return order;
}

struct ChordalityReport {
    bool chordal = true;
    /// Perfect elimination ordering when chordal.
    std::vector<vertex_t> elimination_order;
    /// Chordless cycle of length >= 4, in cycle order, when not chordal.
    std::vector<vertex_t> chordless_cycle;

    explicit operator bool() const noexcept { return chordal; }
};

namespace detail {

// Shortest u-w path avoiding vertices with blocked[v] set; empty if none.
inline std::vector<vertex_t> shortest_path(const Graph& g, vertex_t u, vertex_t w, const std::vector<char>& blocked) {
    const std::size_t n = g.vertex_count();
    const vertex_t none = static_cast<vertex_t>(-1);
    std::vector<vertex_t> parent(n, none);
    std::deque<vertex_t> queue{u};
    parent[u] = u;
    while (!queue.empty()) {
        vertex_t v = queue.front();
        queue.pop_front();
        if (v == w) {
            std::vector<vertex_t> path;
            for (vertex_t x = w; x != u; x = parent[x]) {
                path.push_back(x);
            }
            path.push_back(u);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (vertex_t x : g.neighbours(v)) {
            if (!blocked[x] && parent[x] == none) {
                parent[x] = v;
                queue.push_back(x);
            }
        }
    }
    return {};
}

inline std::vector<vertex_t> find_chordless_cycle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    for (vertex_t v = 0; v < n; ++v) {
        auto nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) {
                    continue;
                }
                blocked[v] = 1;
                for (vertex_t x : nb) {
                    blocked[x] = (x != nb[i] && x != nb[j]);
                }
                auto path = shortest_path(g, nb[i], nb[j], blocked);
                blocked[v] = 0;
                for (vertex_t x : nb) {
                    blocked[x] = 0;
                }
                if (!path.empty()) {
                    path.insert(path.begin(), v);
                    return path;
                }
            }
        }
    }
    return {};
}

} // namespace detail

/// LexBFS + perfect elimination check; a chordless cycle witnesses failure.
inline ChordalityReport is_chordal(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto visit = lex_bfs(g);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[visit[i]] = i;
    }
    ChordalityReport report;
    for (vertex_t v = 0; v < n && report.chordal; ++v) {
        // neighbours visited before v are eliminated after it
        const vertex_t none = static_cast<vertex_t>(-1);
        vertex_t parent = none;
        for (vertex_t w : g.neighbours(v)) {
            if (pos[w] < pos[v] && (parent == none || pos[w] > pos[parent])) {
                parent = w;
            }
        }
        if (parent == none) {
            continue;
        }
        for (vertex_t w : g.neighbours(v)) {
            if (pos[w] < pos[v] && w != parent && !g.adjacent(w, parent)) {
                report.chordal = false;
                break;
            }
        }
    }
    if (report.chordal) {
        report.elimination_order.assign(visit.rbegin(), visit.rend());
    } else {
        report.chordless_cycle = detail::find_chordless_cycle(g);
        if (report.chordless_cycle.size() < 4) {
            throw contract_violation("elimination check failed but no chordless cycle was found");
        }
    }
    return report;
}

/// An induced path on k vertices in path order, or empty if none exists.
/// Bounded depth-first search over induced paths.
inline std::vector<vertex_t> find_induced_path(const Graph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    if (k == 0 || k > n) {
        return {};
    }
    std::vector<vertex_t> path;
    std::vector<char> on_path(n, 0);
    auto extend = [&](auto&& self) -> bool {
        if (path.size() == k) {
            return true;
        }
        vertex_t last = path.back();
        for (vertex_t w : g.neighbours(last)) {
            if (on_path[w]) {
                continue;
            }
            bool chord = false;
            for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) {
                chord = g.adjacent(w, path[i]);
            }
            if (chord) {
                continue;
            }
            path.push_back(w);
            on_path[w] = 1;
            if (self(self)) {
                return true;
            }
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    };
    for (vertex_t s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        if (extend(extend)) {
            return path;
        }
        on_path[s] = 0;
    }
    return {};
}

/// Induced P6 witness, or empty when g is P6-free.
inline std::vector<vertex_t> contains_induced_p6(const Graph& g) { return find_induced_path(g, 6); }

inline bool is_simplicial(const Graph& g, vertex_t x) {
    auto nb = g.neighbours(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!g.adjacent(nb[i], nb[j])) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::vector<vertex_t> stack;
    for (vertex_t s = 0; s < n; ++s) {
        if (colour[s] != -1) {
            continue;
        }
        colour[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            vertex_t v = stack.back();
            stack.pop_back();
            for (vertex_t w : g.neighbours(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_cobipartite(const Graph& g) { return is_bipartite(complement(g)); }

} // namespace domenum
