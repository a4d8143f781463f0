#pragma once

#include <deque>
#include <set>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "hypergraph.hpp"
#include "stream.hpp"
#include "trans_enum.hpp"

namespace domenum {

/// Inclusion-minimal separators of a connected graph.
struct SeparatorFamily {
    enum class Source { generation_rule, oracle };

    Family separators;
    Source source = Source::generation_rule;
};

namespace detail {

template <typename Error>
void require_connected(const Graph& g, std::string_view what) {
    if (g.vertex_count() == 0) {
        throw Error(std::string(what) + " needs a non-empty graph");
    }
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        throw Error(std::string(what) + " needs a connected graph", {comps[0].front(), comps[1].front()});
    }
}

// N(C) for every component C of G minus the blocked vertices.
inline void component_neighbourhoods(const Graph& g, const std::vector<char>& blocked, std::vector<VertexSet>& out) {
    std::vector<char> mark(g.vertex_count(), 0);
    for (const auto& comp : components_avoiding(g, blocked)) {
        std::vector<vertex_t> border;
        for (vertex_t v : comp) {
            for (vertex_t w : g.neighbours(v)) {
                if (blocked[w] && !mark[w]) {
                    mark[w] = 1;
                    border.push_back(w);
                }
            }
        }
        for (vertex_t w : border) {
            mark[w] = 0;
        }
        if (!border.empty()) {
            out.emplace_back(g.vertex_count(), std::move(border));
        }
    }
}

} // namespace detail

/// Number of components C of G \ S that are full: every vertex of S has a
/// neighbour in C. S is a minimal ab-separator for some pair iff this is >= 2.
inline std::size_t full_component_count(const Graph& g, const VertexSet& s) {
    std::vector<char> blocked(g.vertex_count(), 0);
    for (vertex_t v : s) {
        blocked[v] = 1;
    }
    std::size_t full = 0;
    std::vector<char> touched(g.vertex_count(), 0);
    for (const auto& comp : detail::components_avoiding(g, blocked)) {
        std::size_t seen = 0;
        std::vector<vertex_t> marked;
        for (vertex_t v : comp) {
            for (vertex_t w : g.neighbours(v)) {
                if (blocked[w] && !touched[w]) {
                    touched[w] = 1;
                    marked.push_back(w);
                    ++seen;
                }
            }
        }
        for (vertex_t w : marked) {
            touched[w] = 0;
        }
        if (seen == s.size()) {
            ++full;
        }
    }
    return full;
}

/// All minimal ab-separators over all pairs, by the close-separator seed and
/// generation rule: seed with N(C) for components C of G \ N[v]; from each
/// separator S and x in S, add N(C) for components C of G \ (S ∪ N(x)).
/// Result is sorted.
inline Family minimal_ab_separators(const Graph& g) {
    detail::require_connected<precondition_error>(g, "separator enumeration");
    const std::size_t n = g.vertex_count();
    std::set<VertexSet> known;
    std::deque<VertexSet> queue;
    std::vector<VertexSet> found;
    auto offer = [&](std::vector<VertexSet>& candidates) {
        for (auto& s : candidates) {
            if (known.insert(s).second) {
                queue.push_back(std::move(s));
            }
        }
        candidates.clear();
    };

    std::vector<char> blocked(n, 0);
    for (vertex_t v = 0; v < n; ++v) {
        blocked[v] = 1;
        for (vertex_t w : g.neighbours(v)) {
            blocked[w] = 1;
        }
        detail::component_neighbourhoods(g, blocked, found);
        offer(found);
        std::fill(blocked.begin(), blocked.end(), 0);
    }
    while (!queue.empty()) {
        VertexSet s = std::move(queue.front());
        queue.pop_front();
        for (vertex_t x : s) {
            for (vertex_t v : s) {
                blocked[v] = 1;
            }
            for (vertex_t w : g.neighbours(x)) {
                blocked[w] = 1;
            }
            detail::component_neighbourhoods(g, blocked, found);
            offer(found);
            std::fill(blocked.begin(), blocked.end(), 0);
        }
    }
    Family out(known.begin(), known.end());
    for (const auto& s : out) {
        if (full_component_count(g, s) < 2) {
            throw contract_violation("generated set is not a minimal ab-separator");
        }
    }
    return out;
}

/// Inclusion-minimal separators: the minimal ab-separators containing no
/// other one.
inline SeparatorFamily minimal_separators(const Graph& g) {
    Family all = minimal_ab_separators(g);
    std::stable_sort(all.begin(), all.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    Family kept;
    for (const auto& s : all) {
        bool minimal = std::none_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.is_subset_of(s); });
        if (minimal) {
            kept.push_back(s);
        }
    }
    return {canonical(std::move(kept)), SeparatorFamily::Source::generation_rule};
}

/// Minimal connected dominating sets as tr(S(G)). A complete graph has no
/// separator, and its minimal connected dominating sets are the singletons.
inline void cdom_enum(const Graph& g, VertexSetStream& out) {
    detail::require_connected<no_connected_dominating_set>(g, "connected domination");
    const std::size_t n = g.vertex_count();
    if (is_complete(g)) {
        for (vertex_t v = 0; v < n; ++v) {
            out.tick();
            if (!out.emit(VertexSet(n, {v}))) {
                break;
            }
        }
        out.finish();
        return;
    }
    auto family = minimal_separators(g);
    out.tick(family.separators.size());
    trans_enum(Hypergraph(n, std::move(family.separators)), out);
}

} // namespace domenum
