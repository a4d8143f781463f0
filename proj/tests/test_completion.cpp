#include <gtest/gtest.h>

#include <domenum/classify.hpp>
#include <domenum/completion.hpp>
#include <domenum/oracles.hpp>

#include "support/generators.hpp"

namespace domenum {
namespace {

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (vertex_t v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, edges);
}

void expect_labeling_invariants(const Graph& g, const RedundancyLabeling& labels) {
    const std::size_t n = g.vertex_count();
    ASSERT_EQ(labels.irredundant.size() + labels.redundant.size(), n);
    EXPECT_FALSE(labels.irredundant.intersects(labels.redundant));
    for (vertex_t x : labels.redundant) {
        vertex_t y = labels.twin_representative[x];
        EXPECT_TRUE(labels.is_irredundant(y));
        EXPECT_TRUE(closed_neighbourhood(g, y).is_subset_of(closed_neighbourhood(g, x)));
    }
    for (vertex_t y : labels.irredundant) {
        for (vertex_t z : labels.irredundant) {
            if (y != z) {
                EXPECT_FALSE(closed_neighbourhood(g, y).is_subset_of(closed_neighbourhood(g, z)));
            }
        }
    }
}

TEST(Redundancy, Examples) {
    auto p4 = classify_redundancy(path(4));
    EXPECT_EQ(p4.irredundant, VertexSet(4, {0, 3}));
    EXPECT_EQ(p4.redundant, VertexSet(4, {1, 2}));
    auto k3 = classify_redundancy(Graph(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(k3.irredundant, VertexSet(3, {0}));
    EXPECT_EQ(k3.twin_representative, (std::vector<vertex_t>{0, 0, 0}));
}

TEST(Redundancy, InvariantsOnAllSmallGraphs) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Graph& g : testing::all_graphs(n)) {
            expect_labeling_invariants(g, classify_redundancy(g));
        }
    }
}

TEST(Completion, Examples) {
    testing::rng_t rng(47);
    for (int round = 0; round < 50; ++round) {
        Graph g = testing::random_split_graph(rng, 10, 4, 0.4).graph;
        EXPECT_EQ(completion_graph(g), g);
    }
    Graph p6 = path(6);
    EXPECT_EQ(classify_redundancy(p6).irredundant, VertexSet(6, {0, 2, 3, 5}));
    Graph completed = completion_graph(p6);
    std::vector<Edge> extra{{1, 4}};
    EXPECT_EQ(completed, with_added_edges(p6, extra));
    EXPECT_FALSE(is_chordal(completed).chordal);
    EXPECT_EQ(completion_graph(Graph(4)), Graph(4));
}

TEST(Completion, PreservesMinimalDominatingSets) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Graph& g : testing::all_graphs(n)) {
            EXPECT_EQ(oracle_minimal_dominating_sets(g), oracle_minimal_dominating_sets(completion_graph(g)));
        }
    }
}

TEST(Completion, IsIdempotent) {
    testing::rng_t rng(53);
    for (int round = 0; round < 300; ++round) {
        Graph g = testing::random_graph(rng, 9, 0.3);
        Graph once = completion_graph(g);
        EXPECT_EQ(completion_graph(once), once);
    }
}

TEST(Optimality, Examples) {
    Graph p4 = path(4);
    EXPECT_TRUE(check_completion_optimality(p4, {0, 3}));
    EXPECT_TRUE(check_completion_optimality(p4, {1, 3}));
    EXPECT_THROW(check_completion_optimality(p4, {0, 1}), invalid_edge);
    // 1 and 4 are redundant in P6 and not adjacent
    EXPECT_FALSE(check_completion_optimality(path(6), {1, 4}));
}

bool has_closed_twin(const Graph& g, vertex_t x) {
    for (vertex_t w = 0; w < g.vertex_count(); ++w) {
        if (w != x && closed_neighbourhood(g, w) == closed_neighbourhood(g, x)) {
            return true;
        }
    }
    return false;
}

// The e∩IR predicate is exact only when the irredundant endpoint has no
// closed twin: the twin keeps the old minimal neighbourhood alive.
TEST(Optimality, TwinBreaksThePredicate) {
    Graph two_k2(4, std::vector<Edge>{{0, 3}, {1, 2}});
    Family base = oracle_minimal_dominating_sets(two_k2);
    std::vector<Edge> e{{0, 1}};
    EXPECT_EQ(oracle_minimal_dominating_sets(with_added_edges(two_k2, e)), base);
    EXPECT_TRUE(check_completion_optimality(two_k2, {0, 1}));
}

TEST(Optimality, MatchesOracleOnAllSmallGraphs) {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const Graph& g : testing::all_graphs(n)) {
            Family base = oracle_minimal_dominating_sets(g);
            auto labels = classify_redundancy(g);
            bool twin_free = true;
            for (vertex_t v = 0; v < n; ++v) {
                twin_free = twin_free && !has_closed_twin(g, v);
            }
            auto lonely = [&](vertex_t x) { return labels.is_irredundant(x) && !has_closed_twin(g, x); };
            for (vertex_t u = 0; u < n; ++u) {
                for (vertex_t v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) {
                        continue;
                    }
                    std::vector<Edge> e{{u, v}};
                    bool changes = oracle_minimal_dominating_sets(with_added_edges(g, e)) != base;
                    EXPECT_EQ(changes, lonely(u) || lonely(v));
                    if (twin_free) {
                        EXPECT_EQ(changes, check_completion_optimality(g, {u, v}));
                    }
                }
            }
        }
    }
}

TEST(Completion, P6FreeChordalGivesSplit) {
    testing::rng_t rng(59);
    int checked = 0;
    for (int round = 0; round < 300; ++round) {
        Graph g = testing::random_chordal_graph(rng, 10, 0.5);
        if (!contains_induced_p6(g).empty()) {
            continue;
        }
        ++checked;
        auto labels = classify_redundancy(g);
        Graph completed = completion_graph(g);
        EXPECT_TRUE(split_partition(completed));
        for (vertex_t a : labels.irredundant) {
            for (vertex_t b : labels.irredundant) {
                EXPECT_FALSE(a != b && completed.adjacent(a, b));
            }
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Completion, ChordalIffSplit) {
    testing::rng_t rng(61);
    for (int round = 0; round < 300; ++round) {
        Graph g = round % 2 ? testing::random_chordal_graph(rng, 9, 0.4) : testing::random_graph(rng, 8, 0.3);
        Graph completed = completion_graph(g);
        EXPECT_EQ(is_chordal(completed).chordal, split_partition(completed).has_value());
    }
}

} // namespace
} // namespace domenum
