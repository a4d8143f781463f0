#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "classify.hpp"
#include "completion.hpp"
#include "graph.hpp"
#include "stream.hpp"

namespace domenum {

/// Linear order on V(G): rank(v) in 1..n.
class EnumerationOrder {
public:
    EnumerationOrder() = default;

    static EnumerationOrder identity(std::size_t n) {
        std::vector<vertex_t> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        return from_sequence(std::move(seq));
    }

    /// `sequence[i]` is the vertex of rank i+1. Throws unless it is a permutation of 0..n-1.
    static EnumerationOrder from_sequence(std::vector<vertex_t> sequence) {
        EnumerationOrder order;
        order.rank_.assign(sequence.size(), 0);
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            vertex_t v = sequence[i];
            if (v >= sequence.size() || order.rank_[v] != 0) {
                throw invalid_vertex("order is not a permutation (vertex " + std::to_string(v) + ")");
            }
            order.rank_[v] = static_cast<vertex_t>(i + 1);
        }
        order.sequence_ = std::move(sequence);
        return order;
    }

    std::size_t size() const noexcept { return sequence_.size(); }
    vertex_t rank(vertex_t v) const { return rank_.at(v); }
    const std::vector<vertex_t>& sequence() const noexcept { return sequence_; }

private:
    std::vector<vertex_t> rank_;
    std::vector<vertex_t> sequence_;
};

/// Does every y in A ⊆ C(G) have a private neighbour with respect to
/// A ∪ (S(G) \ N(A))? A singleton is its own private neighbour; otherwise y
/// needs an independent neighbour s with |N(s) ∩ A| = 1.
inline bool clique_part_has_all_privates(const Graph& g, const SplitPartition& p, const VertexSet& a) {
    if (!a.is_subset_of(p.clique)) {
        throw invalid_partition("candidate set is not inside the clique side");
    }
    if (a.size() <= 1) {
        return true;
    }
    std::vector<std::uint32_t> marks(g.vertex_count(), 0);
    for (vertex_t y : a) {
        for (vertex_t s : g.neighbours(y)) {
            ++marks[s];
        }
    }
    for (vertex_t y : a) {
        bool has_private = false;
        for (vertex_t s : g.neighbours(y)) {
            if (p.independent.contains(s) && marks[s] == 1) {
                has_private = true;
                break;
            }
        }
        if (!has_private) {
            return false;
        }
    }
    return true;
}

/// Depth-first enumeration of the minimal dominating sets of a split graph,
/// one per clique subset A whose members all have private neighbours; the
/// set for A is A ∪ (S \ N(A)). Extensions are tried in increasing order of
/// rank, above the highest-ranked member of A.
///
/// Marks are maintained incrementally: marks[s] = |N(s) ∩ A| for s in S,
/// owner[s] is the XOR of N(s) ∩ A (the unique owner when marks[s] == 1), and
/// privates[y] counts the independent neighbours owned by y alone. Testing a
/// candidate x costs O(deg(x)); each node costs O(n + m) including its output.
class DominantSplit {
public:
    DominantSplit(const Graph& g, const SplitPartition& p, const EnumerationOrder& sigma)
        : n_(g.vertex_count()),
          in_clique_(n_, 0),
          in_a_(n_, 0),
          marks_(n_, 0),
          owner_(n_, 0),
          privates_(n_, 0),
          stable_nbrs_(n_) {
        if (auto defect = split_partition_defect(g, p, true); !defect.empty()) {
            throw invalid_partition(defect);
        }
        if (sigma.size() != n_) {
            throw invalid_vertex("order size does not match the graph");
        }
        for (vertex_t c : p.clique) {
            in_clique_[c] = 1;
        }
        for (vertex_t v : sigma.sequence()) {
            if (in_clique_[v]) {
                clique_order_.push_back(v);
            }
        }
        for (vertex_t c : p.clique) {
            for (vertex_t s : g.neighbours(c)) {
                if (!in_clique_[s]) {
                    stable_nbrs_[c].push_back(s);
                }
            }
        }
        preprocessing_ops_ = n_ + 2 * g.edge_count();
    }

    /// Emits every minimal dominating set exactly once, starting with S(G).
    void run(VertexSetStream& out) {
        out.tick(preprocessing_ops_);
        visit(0, out);
        out.finish();
    }

private:
    bool visit(std::size_t next, VertexSetStream& out) {
        if (!out.emit(current(out))) {
            return false;
        }
        std::vector<std::size_t> cov;
        for (std::size_t i = next; i < clique_order_.size(); ++i) {
            if (extends(clique_order_[i], out)) {
                cov.push_back(i);
            }
        }
        for (std::size_t i : cov) {
            add(clique_order_[i], out);
            bool go_on = visit(i + 1, out);
            remove(clique_order_[i], out);
            if (!go_on) {
                return false;
            }
        }
        return true;
    }

    VertexSet current(VertexSetStream& out) const {
        out.tick(n_);
        std::vector<vertex_t> ids;
        for (vertex_t v = 0; v < n_; ++v) {
            if (in_a_[v] || (!in_clique_[v] && marks_[v] == 0)) {
                ids.push_back(v);
            }
        }
        return VertexSet(n_, std::move(ids));
    }

    // Would every member of A ∪ {x} keep a private neighbour?
    bool extends(vertex_t x, VertexSetStream& out) {
        const auto& nbrs = stable_nbrs_[x];
        out.tick(1 + 2 * nbrs.size());
        std::size_t lost = 0;
        std::size_t own = 0;
        for (vertex_t s : nbrs) {
            if (marks_[s] == 0) {
                ++own;
            } else if (marks_[s] == 1 && --privates_[owner_[s]] == 0) {
                ++lost;
            }
        }
        for (vertex_t s : nbrs) {
            if (marks_[s] == 1) {
                ++privates_[owner_[s]];
            }
        }
        if (a_size_ == 0) {
            return true;
        }
        return starving_ + lost == 0 && own > 0;
    }

    void add(vertex_t x, VertexSetStream& out) {
        out.tick(1 + stable_nbrs_[x].size());
        in_a_[x] = 1;
        ++a_size_;
        privates_[x] = 0;
        for (vertex_t s : stable_nbrs_[x]) {
            if (marks_[s] == 1) {
                vertex_t y = owner_[s];
                if (--privates_[y] == 0) {
                    ++starving_;
                }
            }
            if (++marks_[s] == 1) {
                ++privates_[x];
            }
            owner_[s] ^= x;
        }
        if (privates_[x] == 0) {
            ++starving_;
        }
    }

    void remove(vertex_t x, VertexSetStream& out) {
        out.tick(1 + stable_nbrs_[x].size());
        if (privates_[x] == 0) {
            --starving_;
        }
        for (vertex_t s : stable_nbrs_[x]) {
            owner_[s] ^= x;
            if (--marks_[s] == 1) {
                if (privates_[owner_[s]]++ == 0) {
                    --starving_;
                }
            }
        }
        privates_[x] = 0;
        in_a_[x] = 0;
        --a_size_;
    }

    std::size_t n_;
    std::vector<char> in_clique_;
    std::vector<char> in_a_;
    std::vector<std::uint32_t> marks_;
    std::vector<vertex_t> owner_;
    std::vector<std::uint32_t> privates_;
    std::vector<std::vector<vertex_t>> stable_nbrs_;
    std::vector<vertex_t> clique_order_;
    std::size_t a_size_ = 0;
    // members of A with no private independent neighbour
    std::size_t starving_ = 0;
    std::uint64_t preprocessing_ops_ = 0;
};

inline void dominant_split(const Graph& g, const SplitPartition& p, const EnumerationOrder& sigma,
                           VertexSetStream& out) {
    DominantSplit(g, p, sigma).run(out);
}

inline void dominant_split(const Graph& g, const SplitPartition& p, VertexSetStream& out) {
    DominantSplit(g, p, EnumerationOrder::identity(g.vertex_count())).run(out);
}

/// Minimal dominating sets of a graph whose completion is split, by running
/// DominantSplit on the completion. Throws precondition_error otherwise.
inline void dom_enum_via_completion(const Graph& g, const EnumerationOrder& sigma, VertexSetStream& out) {
    Graph completed = completion_graph(g);
    auto p = split_partition(completed);
    if (!p) {
        throw precondition_error("completion graph is not split", split_obstruction(completed));
    }
    dominant_split(completed, *p, sigma, out);
}

/// Minimal dominating sets of a P6-free chordal graph with O(n+m) delay.
inline void dom_enum_p6_chordal(const Graph& g, const EnumerationOrder& sigma, VertexSetStream& out) {
    auto chordal = is_chordal(g);
    if (!chordal) {
        throw precondition_error("graph is not chordal", chordal.chordless_cycle);
    }
    if (auto path = contains_induced_p6(g); !path.empty()) {
        throw precondition_error("graph contains an induced P6", path);
    }
    Graph completed = completion_graph(g);
    auto p = split_partition(completed);
    if (!p) {
        throw contract_violation("completion of a P6-free chordal graph is not split");
    }
    dominant_split(completed, *p, sigma, out);
}

inline void dom_enum_p6_chordal(const Graph& g, VertexSetStream& out) {
    dom_enum_p6_chordal(g, EnumerationOrder::identity(g.vertex_count()), out);
}

} // namespace domenum
