#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "hypergraph.hpp"

// Exhaustive subset-lattice enumerators. They share nothing with the
// algorithmic modules beyond the Graph/Hypergraph containers: every property
// is evaluated directly on bitmasks.

namespace domenum {

struct OracleOptions {
    /// Largest universe the oracles accept; 2^cap subsets are scanned.
    std::size_t cap = 16;
};

namespace oracle_detail {

using mask_t = std::uint64_t;

inline void check_cap(std::size_t n, const OracleOptions& options) {
    if (n > options.cap || n > 30) {
        throw precondition_error("oracle refuses universe of size " + std::to_string(n) + " (cap " +
                                 std::to_string(options.cap) + ")");
    }
}

inline std::vector<mask_t> closed_masks(const Graph& g) {
    std::vector<mask_t> out(g.vertex_count(), 0);
    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        out[v] = mask_t{1} << v;
        for (vertex_t w : g.neighbours(v)) {
            out[v] |= mask_t{1} << w;
        }
    }
    return out;
}

inline std::vector<mask_t> open_masks(const Graph& g) {
    auto out = closed_masks(g);
    for (vertex_t v = 0; v < out.size(); ++v) {
        out[v] &= ~(mask_t{1} << v);
    }
    return out;
}

inline VertexSet to_set(mask_t m, std::size_t n) {
    std::vector<vertex_t> ids;
    for (vertex_t v = 0; v < n; ++v) {
        if (m >> v & 1) {
            ids.push_back(v);
        }
    }
    return VertexSet(n, std::move(ids));
}

inline bool induces_connected(mask_t set, const std::vector<mask_t>& closed) {
    if (set == 0) {
        return false;
    }
    mask_t reached = set & (~set + 1);
    for (;;) {
        mask_t grown = reached;
        for (mask_t r = reached; r; r &= r - 1) {
            grown |= closed[std::countr_zero(r)] & set;
        }
        if (grown == reached) {
            return reached == set;
        }
        reached = grown;
    }
}

// Number of components of G[set]; 0 for the empty set.
inline std::size_t induced_components(mask_t set, const std::vector<mask_t>& closed) {
    std::size_t count = 0;
    while (set) {
        mask_t reached = set & (~set + 1);
        for (;;) {
            mask_t grown = reached;
            for (mask_t r = reached; r; r &= r - 1) {
                grown |= closed[std::countr_zero(r)] & set;
            }
            if (grown == reached) {
                break;
            }
            reached = grown;
        }
        set &= ~reached;
        ++count;
    }
    return count;
}

// Masks in population-count-then-lexicographic order of their member lists.
inline std::vector<mask_t> lattice_order(std::size_t n) {
    std::vector<mask_t> masks(mask_t{1} << n);
    for (mask_t m = 0; m < masks.size(); ++m) {
        masks[m] = m;
    }
    // Equal popcounts: the list holding the lowest differing vertex is smaller.
    std::sort(masks.begin(), masks.end(), [](mask_t a, mask_t b) {
        int pa = std::popcount(a);
        int pb = std::popcount(b);
        if (pa != pb) {
            return pa < pb;
        }
        mask_t diff = a ^ b;
        return (a & diff & (~diff + 1)) != 0;
    });
    return masks;
}

// Sets satisfying `holds` such that every one-vertex deletion fails it.
template <typename Pred>
Family minimal_by_deletion(std::size_t n, Pred holds) {
    Family out;
    for (mask_t m : lattice_order(n)) {
        if (!holds(m)) {
            continue;
        }
        bool minimal = true;
        for (mask_t r = m; r && minimal; r &= r - 1) {
            minimal = !holds(m & ~(r & (~r + 1)));
        }
        if (minimal) {
            out.push_back(to_set(m, n));
        }
    }
    return out;
}

} // namespace oracle_detail

inline Family oracle_minimal_dominating_sets(const Graph& g, const OracleOptions& options = {}) {
    using namespace oracle_detail;
    const std::size_t n = g.vertex_count();
    check_cap(n, options);
    const auto closed = closed_masks(g);
    const mask_t all = (mask_t{1} << n) - 1;
    return minimal_by_deletion(n, [&](mask_t d) {
        mask_t covered = 0;
        for (mask_t r = d; r; r &= r - 1) {
            covered |= closed[std::countr_zero(r)];
        }
        return covered == all;
    });
}

/// Every vertex, members included, needs a neighbour in D. Empty when g has
/// an isolated vertex.
inline Family oracle_minimal_total_dominating_sets(const Graph& g, const OracleOptions& options = {}) {
    using namespace oracle_detail;
    const std::size_t n = g.vertex_count();
    check_cap(n, options);
    const auto open = open_masks(g);
    const mask_t all = (mask_t{1} << n) - 1;
    return minimal_by_deletion(n, [&](mask_t d) {
        mask_t covered = 0;
        for (mask_t r = d; r; r &= r - 1) {
            covered |= open[std::countr_zero(r)];
        }
        return covered == all;
    });
}

/// Dominating sets inducing a connected subgraph; minimal when every
/// one-vertex deletion breaks domination or connectivity.
inline Family oracle_minimal_connected_dominating_sets(const Graph& g, const OracleOptions& options = {}) {
    using namespace oracle_detail;
    const std::size_t n = g.vertex_count();
    check_cap(n, options);
    const auto closed = closed_masks(g);
    const mask_t all = (mask_t{1} << n) - 1;
    return minimal_by_deletion(n, [&](mask_t d) {
        mask_t covered = 0;
        for (mask_t r = d; r; r &= r - 1) {
            covered |= closed[std::countr_zero(r)];
        }
        return covered == all && induces_connected(d, closed);
    });
}

inline Family oracle_minimal_transversals(const Hypergraph& h, const OracleOptions& options = {}) {
    using namespace oracle_detail;
    const std::size_t n = h.ground_size();
    check_cap(n, options);
    std::vector<mask_t> edges;
    for (const auto& e : h.edges()) {
        mask_t m = 0;
        for (vertex_t v : e) {
            m |= mask_t{1} << v;
        }
        edges.push_back(m);
    }
    return minimal_by_deletion(n, [&](mask_t t) {
        return std::all_of(edges.begin(), edges.end(), [t](mask_t e) { return (e & t) != 0; });
    });
}

/// Sets S with G \ S disconnected such that no proper subset of S
/// disconnects G. Separation is not monotone, so every subset is checked.
inline Family oracle_minimal_separators(const Graph& g, const OracleOptions& options = {}) {
    using namespace oracle_detail;
    const std::size_t n = g.vertex_count();
    check_cap(n, options);
    const auto closed = closed_masks(g);
    const mask_t all = (mask_t{1} << n) - 1;
    const std::size_t size = std::size_t{1} << n;
    std::vector<char> separates(size, 0);
    std::vector<char> contains_separator(size, 0);  // some subset (itself included) separates
    for (mask_t m = 0; m < size; ++m) {
        separates[m] = induced_components(all & ~m, closed) >= 2;
        char any = separates[m];
        for (mask_t r = m; r && !any; r &= r - 1) {
            any = contains_separator[m & ~(r & (~r + 1))];
        }
        contains_separator[m] = any;
    }
    Family out;
    for (mask_t m : lattice_order(n)) {
        if (!separates[m]) {
            continue;
        }
        bool minimal = true;
        for (mask_t r = m; r && minimal; r &= r - 1) {
            minimal = !contains_separator[m & ~(r & (~r + 1))];
        }
        if (minimal) {
            out.push_back(to_set(m, n));
        }
    }
    return out;
}

} // namespace domenum
