#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace domenum {

/// Strictly sorted set of vertex ids drawn from [0, universe_size).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe) : universe_(universe) {}

    /// Sorts and deduplicates `ids`; throws invalid_vertex on an id outside the universe.
    VertexSet(std::size_t universe, std::vector<vertex_t> ids) : ids_(std::move(ids)), universe_(universe) {
        if (!std::is_sorted(ids_.begin(), ids_.end())) {
            std::sort(ids_.begin(), ids_.end());
        }
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
        if (!ids_.empty() && ids_.back() >= universe_) {
            throw invalid_vertex("vertex " + std::to_string(ids_.back()) + " outside universe of size " +
                                 std::to_string(universe_));
        }
    }

    VertexSet(std::size_t universe, std::initializer_list<vertex_t> ids)
        : VertexSet(universe, std::vector<vertex_t>(ids)) {}

    static VertexSet full(std::size_t universe) {
        std::vector<vertex_t> ids(universe);
        for (std::size_t i = 0; i < universe; ++i) {
            ids[i] = static_cast<vertex_t>(i);
        }
        return VertexSet(universe, std::move(ids));
    }

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t universe_size() const noexcept { return universe_; }

    std::span<const vertex_t> members() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    vertex_t operator[](std::size_t i) const { return ids_[i]; }
    vertex_t front() const { return ids_.front(); }
    vertex_t back() const { return ids_.back(); }

    bool contains(vertex_t v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    bool intersects(const VertexSet& other) const {
        auto a = ids_.begin();
        auto b = other.ids_.begin();
        while (a != ids_.end() && b != other.ids_.end()) {
            if (*a == *b) {
                return true;
            }
            if (*a < *b) {
                ++a;
            } else {
                ++b;
            }
        }
        return false;
    }

    /// Same members re-homed in another universe; throws if a member does not fit.
    VertexSet with_universe(std::size_t universe) const { return VertexSet(universe, ids_); }

    // Lexicographic on members, then universe size.
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<vertex_t> ids_;
    std::size_t universe_ = 0;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<vertex_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::max(a.universe_size(), b.universe_size()), std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<vertex_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(a.universe_size(), std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<vertex_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(a.universe_size(), std::move(out));
}

/// A family of vertex sets (an enumeration result, a hyperedge list, ...).
using Family = std::vector<VertexSet>;

/// Sorted copy of `family`; the canonical form used for family comparisons.
inline Family canonical(Family family) {
    std::sort(family.begin(), family.end());
    return family;
}

inline bool is_antichain(const Family& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i != j && family[i].is_subset_of(family[j])) {
                return false;
            }
        }
    }
    return true;
}

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? " " : "") << s[i];
    }
    return os << '}';
}

} // namespace domenum
