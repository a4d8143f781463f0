#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "classify.hpp"
#include "hypergraph.hpp"
#include "reductions.hpp"
#include "split_enum.hpp"
#include "stream.hpp"

namespace domenum {

namespace detail {

using bitset = boost::dynamic_bitset<std::uint64_t>;

inline bitset to_bitset(const VertexSet& s, std::size_t n) {
    bitset b(n);
    for (vertex_t v : s) {
        b.set(v);
    }
    return b;
}

inline VertexSet to_vertex_set(const bitset& b) {
    std::vector<vertex_t> ids;
    ids.reserve(b.count());
    for (auto i = b.find_first(); i != bitset::npos; i = b.find_next(i)) {
        ids.push_back(static_cast<vertex_t>(i));
    }
    return VertexSet(b.size(), std::move(ids));
}

} // namespace detail

/// Minimal transversals by Berge sequential composition: edges are processed
/// in order (after minimize), keeping tr of the prefix. A transversal T that
/// misses the next edge e is replaced by T ∪ {v} for the v in e outside
/// every intersection I_u, where I_u is the intersection of the prefix edges
/// that meet T only in u; exactly those extensions stay minimal.
///
/// Correct at any size but not output-polynomial in general: intermediate
/// antichains can outgrow tr(H). Emits the final antichain in lexicographic order.
inline void trans_enum(const Hypergraph& h, VertexSetStream& out) {
    detail::require_transversal_exists(h);
    using detail::bitset;
    const std::size_t n = h.ground_size();
    Hypergraph reduced = minimize(h);
    std::vector<bitset> edges;
    edges.reserve(reduced.edge_count());
    for (const auto& e : reduced.edges()) {
        edges.push_back(detail::to_bitset(e, n));
    }

    std::vector<bitset> antichain{bitset(n)};
    std::vector<bitset> meet(n, bitset(n));
    std::vector<char> has_private(n, 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const bitset& e = edges[k];
        std::vector<bitset> next;
        std::vector<const bitset*> missing;
        for (const auto& t : antichain) {
            out.tick();
            if (t.intersects(e)) {
                next.push_back(t);
            } else {
                missing.push_back(&t);
            }
        }
        for (const bitset* t : missing) {
            for (std::size_t u = t->find_first(); u != bitset::npos; u = t->find_next(u)) {
                has_private[u] = 0;
            }
            for (std::size_t f = 0; f < k; ++f) {
                out.tick();
                bitset hit = edges[f] & *t;
                std::size_t u = hit.find_first();
                if (u == bitset::npos || hit.find_next(u) != bitset::npos) {
                    continue;
                }
                if (has_private[u]) {
                    meet[u] &= edges[f];
                } else {
                    meet[u] = edges[f];
                    has_private[u] = 1;
                }
            }
            bitset forbidden(n);
            for (std::size_t u = t->find_first(); u != bitset::npos; u = t->find_next(u)) {
                if (!has_private[u]) {
                    throw contract_violation("intermediate transversal is not minimal");
                }
                forbidden |= meet[u];
            }
            for (std::size_t v = e.find_first(); v != bitset::npos; v = e.find_next(v)) {
                out.tick();
                if (!forbidden.test(v)) {
                    next.push_back(*t);
                    next.back().set(v);
                }
            }
        }
        antichain = std::move(next);
    }

    Family result;
    result.reserve(antichain.size());
    for (const auto& t : antichain) {
        result.push_back(detail::to_vertex_set(t));
    }
    std::sort(result.begin(), result.end());
    for (const auto& t : result) {
        out.tick();
        if (!out.emit(t)) {
            break;
        }
    }
    out.finish();
}

/// Which algorithm dom_enum used.
enum class DomEnumRoute { split, p6_free_chordal, completion_split, generic };

inline std::string_view to_string(DomEnumRoute route) {
    switch (route) {
    case DomEnumRoute::split: return "split";
    case DomEnumRoute::p6_free_chordal: return "p6-free-chordal";
    case DomEnumRoute::completion_split: return "completion-split";
    case DomEnumRoute::generic: return "generic";
    }
    return "unknown";
}

struct DomEnumOptions {
    /// Force a route; the default picks the first applicable one in the
    /// order split, P6-free chordal, split completion, generic.
    std::optional<DomEnumRoute> route;
    /// Extension order for the DominantSplit routes; identity by default.
    std::optional<EnumerationOrder> sigma;
};

/// Minimal dominating sets through the generic reduction D(G) = tr(Min(N(G))).
inline void dom_enum_generic(const Graph& g, VertexSetStream& out) {
    trans_enum(minimize(closed_neighbourhood_hypergraph(g)), out);
}

inline DomEnumRoute choose_route(const Graph& g) {
    if (split_partition(g)) {
        return DomEnumRoute::split;
    }
    if (is_chordal(g) && contains_induced_p6(g).empty()) {
        return DomEnumRoute::p6_free_chordal;
    }
    if (split_partition(completion_graph(g))) {
        return DomEnumRoute::completion_split;
    }
    return DomEnumRoute::generic;
}

/// Emits D(G) exactly once per set; returns the route taken.
inline DomEnumRoute dom_enum(const Graph& g, VertexSetStream& out, const DomEnumOptions& options = {}) {
    DomEnumRoute route = options.route ? *options.route : choose_route(g);
    EnumerationOrder sigma = options.sigma ? *options.sigma : EnumerationOrder::identity(g.vertex_count());
    switch (route) {
    case DomEnumRoute::split: {
        auto p = split_partition(g);
        if (!p) {
            throw precondition_error("graph is not split", split_obstruction(g));
        }
        dominant_split(g, *p, sigma, out);
        break;
    }
    case DomEnumRoute::p6_free_chordal:
        dom_enum_p6_chordal(g, sigma, out);
        break;
    case DomEnumRoute::completion_split:
        dom_enum_via_completion(g, sigma, out);
        break;
    case DomEnumRoute::generic:
        dom_enum_generic(g, out);
        break;
    }
    return route;
}

/// Minimal total dominating sets as tr(N_o(G)).
inline void tdom_enum(const Graph& g, VertexSetStream& out) { trans_enum(open_neighbourhood_hypergraph(g), out); }

struct StrippedHypergraph {
    /// H with the dominating vertices deleted from every edge. The ground set
    /// keeps its size; deleted vertices become isolated.
    Hypergraph residual;
    VertexSet removed;
    /// Some edge consisted of dominating vertices only.
    bool residual_has_empty_edge = false;
};

/// Splits off the vertices lying in every hyperedge:
/// tr(H) = {{x} : x removed} ∪ tr(residual).
inline StrippedHypergraph strip_dominating_vertices(const Hypergraph& h) {
    const std::size_t n = h.ground_size();
    std::vector<std::size_t> count(n, 0);
    for (const auto& e : h.edges()) {
        for (vertex_t v : e) {
            ++count[v];
        }
    }
    std::vector<vertex_t> removed;
    if (h.edge_count() > 0) {
        for (vertex_t v = 0; v < n; ++v) {
            if (count[v] == h.edge_count()) {
                removed.push_back(v);
            }
        }
    }
    StrippedHypergraph out;
    out.removed = VertexSet(n, std::move(removed));
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        edges.push_back(set_difference(e, out.removed));
        out.residual_has_empty_edge = out.residual_has_empty_edge || edges.back().empty();
    }
    out.residual = Hypergraph(n, std::move(edges), true);
    return out;
}

} // namespace domenum
