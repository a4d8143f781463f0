#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace domenum {

/// Ground set 0..ground_size-1 plus an ordered list of hyperedges. Edge order
/// is preserved because incidence constructions name vertices after edge
/// positions. Duplicate edges are legal.
class Hypergraph {
public:
    Hypergraph() = default;

    explicit Hypergraph(std::size_t ground_size) : ground_size_(ground_size) {}

    /// Empty hyperedges are rejected unless `allow_empty_edges` is set.
    Hypergraph(std::size_t ground_size, std::vector<VertexSet> edges, bool allow_empty_edges = false)
        : ground_size_(ground_size) {
        edges_.reserve(edges.size());
        for (auto& e : edges) {
            if (e.empty() && !allow_empty_edges) {
                throw invalid_edge("empty hyperedge at position " + std::to_string(edges_.size()));
            }
            edges_.push_back(e.universe_size() == ground_size ? std::move(e) : e.with_universe(ground_size));
        }
    }

    static Hypergraph from_lists(std::size_t ground_size, const std::vector<std::vector<vertex_t>>& edges,
                                 bool allow_empty_edges = false) {
        std::vector<VertexSet> sets;
        sets.reserve(edges.size());
        for (const auto& e : edges) {
            sets.emplace_back(ground_size, e);
        }
        return Hypergraph(ground_size, std::move(sets), allow_empty_edges);
    }

    std::size_t ground_size() const noexcept { return ground_size_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const VertexSet> edges() const noexcept { return edges_; }
    const VertexSet& edge(std::size_t i) const { return edges_.at(i); }

    bool has_empty_edge() const {
        for (const auto& e : edges_) {
            if (e.empty()) {
                return true;
            }
        }
        return false;
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t ground_size_ = 0;
    std::vector<VertexSet> edges_;
};

/// Min(H): keeps edges with no other edge strictly inside them; among equal
/// edges the earliest copy survives. Ground size is unchanged.
inline Hypergraph minimize(const Hypergraph& h) {
    auto edges = h.edges();
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < edges.size() && minimal; ++j) {
            if (j == i || !edges[j].is_subset_of(edges[i])) {
                continue;
            }
            // strictly smaller edge, or an earlier duplicate
            if (edges[j].size() < edges[i].size() || j < i) {
                minimal = false;
            }
        }
        if (minimal) {
            kept.push_back(edges[i]);
        }
    }
    return Hypergraph(h.ground_size(), std::move(kept), true);
}

struct SimplicityReport {
    enum class Violation { none, duplicate_edge, contained_edge, uncovered_vertex };

    Violation violation = Violation::none;
    /// For edge violations: edge(inner) is contained in edge(outer).
    std::size_t inner = 0;
    std::size_t outer = 0;
    vertex_t vertex = 0;

    bool simple() const noexcept { return violation == Violation::none; }
    explicit operator bool() const noexcept { return simple(); }
};

/// Simple = antichain without duplicates that covers the ground set.
inline SimplicityReport is_simple(const Hypergraph& h) {
    SimplicityReport report;
    auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i != j && edges[i].is_subset_of(edges[j])) {
                report.violation = edges[i].size() == edges[j].size()
                                       ? SimplicityReport::Violation::duplicate_edge
                                       : SimplicityReport::Violation::contained_edge;
                report.inner = i;
                report.outer = j;
                return report;
            }
        }
    }
    std::vector<char> covered(h.ground_size(), 0);
    for (const auto& e : edges) {
        for (vertex_t v : e) {
            covered[v] = 1;
        }
    }
    for (vertex_t v = 0; v < covered.size(); ++v) {
        if (!covered[v]) {
            report.violation = SimplicityReport::Violation::uncovered_vertex;
            report.vertex = v;
            return report;
        }
    }
    return report;
}

namespace detail {

inline void require_transversal_exists(const Hypergraph& h) {
    if (h.has_empty_edge()) {
        throw no_transversal("hypergraph contains an empty hyperedge; no transversal exists");
    }
}

inline void check_ground(const Hypergraph& h, const VertexSet& t) {
    if (!t.empty() && t.back() >= h.ground_size()) {
        throw invalid_vertex("vertex " + std::to_string(t.back()) + " outside ground set");
    }
}

} // namespace detail

inline bool is_transversal(const Hypergraph& h, const VertexSet& t) {
    detail::require_transversal_exists(h);
    detail::check_ground(h, t);
    for (const auto& e : h.edges()) {
        if (!e.intersects(t)) {
            return false;
        }
    }
    return true;
}

/// Transversal in which every member has a witnessing edge it alone hits.
inline bool is_minimal_transversal(const Hypergraph& h, const VertexSet& t) {
    detail::require_transversal_exists(h);
    detail::check_ground(h, t);
    std::vector<char> witnessed(h.ground_size(), 0);
    for (const auto& e : h.edges()) {
        std::size_t hits = 0;
        vertex_t last = 0;
        for (vertex_t v : e) {
            if (t.contains(v)) {
                ++hits;
                last = v;
            }
        }
        if (hits == 0) {
            return false;
        }
        if (hits == 1) {
            witnessed[last] = 1;
        }
    }
    for (vertex_t v : t) {
        if (!witnessed[v]) {
            return false;
        }
    }
    return true;
}

/// The edges of H as a family.
inline Family edge_family(const Hypergraph& h) { return Family(h.edges().begin(), h.edges().end()); }

} // namespace domenum
