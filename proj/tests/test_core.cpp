#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include <domenum/graph.hpp>
#include <domenum/hypergraph.hpp>
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

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u) {
        for (vertex_t v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

// x1..x4 -> 0..3
Hypergraph six_edges() {
    return Hypergraph::from_lists(4, {{0, 1}, {0, 1, 2}, {0, 2, 3}, {1, 3}, {2, 3}, {1, 3}});
}

TEST(VertexSet, SortsAndDeduplicates) {
    VertexSet s(5, {3, 1, 3, 0});
    EXPECT_TRUE(std::ranges::equal(s.members(), std::vector<vertex_t>{0, 1, 3}));
    EXPECT_TRUE(s.contains(1));
    EXPECT_FALSE(s.contains(2));
    EXPECT_THROW(VertexSet(3, {0, 3}), invalid_vertex);
}

TEST(VertexSet, SetAlgebra) {
    VertexSet a(6, {0, 2, 4});
    VertexSet b(6, {2, 3});
    EXPECT_EQ(set_union(a, b), VertexSet(6, {0, 2, 3, 4}));
    EXPECT_EQ(set_intersection(a, b), VertexSet(6, {2}));
    EXPECT_EQ(set_difference(a, b), VertexSet(6, {0, 4}));
    EXPECT_TRUE(VertexSet(6, {2}).is_subset_of(a));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_FALSE(VertexSet(6, {1, 5}).intersects(a));
    std::ostringstream os;
    os << a;
    EXPECT_EQ(os.str(), "{0 2 4}");
}

TEST(VertexSet, Antichain) {
    EXPECT_TRUE(is_antichain({VertexSet(3, {0, 1}), VertexSet(3, {1, 2})}));
    EXPECT_FALSE(is_antichain({VertexSet(3, {0}), VertexSet(3, {0, 2})}));
    EXPECT_FALSE(is_antichain({VertexSet(3, {0}), VertexSet(3, {0})}));
}

TEST(Graph, RejectsLoopsAndForeignVertices) {
    EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), invalid_edge);
    EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), invalid_vertex);
}

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
    Graph g(4, std::vector<Edge>{{2, 0}, {0, 1}, {3, 0}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 3u);
    auto nb = g.neighbours(0);
    EXPECT_EQ(std::vector<vertex_t>(nb.begin(), nb.end()), (std::vector<vertex_t>{1, 2, 3}));
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Graph, ClosedNeighbourhood) {
    EXPECT_EQ(closed_neighbourhood(path(3), 1), VertexSet(3, {0, 1, 2}));
    EXPECT_EQ(closed_neighbourhood(Graph(2), 1), VertexSet(2, {1}));
    EXPECT_EQ(closed_neighbourhood(complete(4), 0), VertexSet::full(4));
    EXPECT_THROW(closed_neighbourhood(path(3), 3), invalid_vertex);
}

TEST(Graph, NeighbourhoodOfSet) {
    Graph p4 = path(4);
    EXPECT_EQ(closed_neighbourhood_of_set(p4, VertexSet(4, {0, 3})), VertexSet::full(4));
    EXPECT_TRUE(closed_neighbourhood_of_set(p4, VertexSet(4, {})).empty());
    EXPECT_EQ(open_neighbourhood_of_set(p4, VertexSet(4, {1})), VertexSet(4, {0, 2}));
}

TEST(Graph, Components) {
    auto two = connected_components(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], VertexSet(4, {0, 1}));
    EXPECT_EQ(two[1], VertexSet(4, {2, 3}));
    EXPECT_EQ(connected_components(path(5)).size(), 1u);
    auto edgeless = connected_components(Graph(3));
    ASSERT_EQ(edgeless.size(), 3u);
    EXPECT_EQ(edgeless[2], VertexSet(3, {2}));
}

TEST(Graph, AddedEdges) {
    std::vector<Edge> closing{{0, 2}};
    EXPECT_EQ(with_added_edges(path(3), closing), complete(3));
    std::vector<Edge> existing{{1, 0}};
    Graph same = with_added_edges(path(3), existing);
    EXPECT_EQ(same, path(3));
    EXPECT_EQ(same.edge_count(), 2u);
    std::vector<Edge> loop{{0, 0}};
    EXPECT_THROW(with_added_edges(path(3), loop), invalid_edge);
}

TEST(Graph, ComplementAndInducedSubgraph) {
    testing::rng_t rng(11);
    for (int i = 0; i < 50; ++i) {
        Graph g = testing::random_graph(rng, 7, 0.4);
        Graph c = complement(g);
        EXPECT_EQ(complement(c), g);
        EXPECT_EQ(g.edge_count() + c.edge_count(), 21u);
        auto comps = connected_components(g);
        std::size_t covered = 0;
        for (const auto& comp : comps) {
            covered += comp.size();
        }
        EXPECT_EQ(covered, 7u);
    }
    auto sub = induced_subgraph(path(5), VertexSet(5, {1, 2, 4}));
    EXPECT_EQ(sub.graph.vertex_count(), 3u);
    EXPECT_EQ(sub.graph.edge_count(), 1u);
    EXPECT_EQ(sub.to_parent, (std::vector<vertex_t>{1, 2, 4}));
}

TEST(Hypergraph, EmptyEdgesNeedTheFlag) {
    EXPECT_THROW(Hypergraph::from_lists(2, {{0}, {}}), invalid_edge);
    Hypergraph h = Hypergraph::from_lists(2, {{0}, {}}, true);
    EXPECT_TRUE(h.has_empty_edge());
    EXPECT_THROW(is_transversal(h, VertexSet(2, {0})), no_transversal);
}

TEST(Hypergraph, MinimizeSixEdgeExample) {
    Hypergraph m = minimize(six_edges());
    EXPECT_EQ(m.ground_size(), 4u);
    ASSERT_EQ(m.edge_count(), 3u);
    EXPECT_EQ(m.edge(0), VertexSet(4, {0, 1}));
    EXPECT_EQ(m.edge(1), VertexSet(4, {1, 3}));
    EXPECT_EQ(m.edge(2), VertexSet(4, {2, 3}));
    EXPECT_EQ(minimize(m), m);
    Hypergraph nested = minimize(Hypergraph::from_lists(2, {{0}, {0, 1}}));
    ASSERT_EQ(nested.edge_count(), 1u);
    EXPECT_EQ(nested.edge(0), VertexSet(2, {0}));
}

TEST(Hypergraph, Simplicity) {
    auto report = is_simple(six_edges());
    EXPECT_FALSE(report.simple());
    EXPECT_EQ(report.violation, SimplicityReport::Violation::contained_edge);
    EXPECT_EQ(report.inner, 0u);
    EXPECT_EQ(report.outer, 1u);
    EXPECT_TRUE(is_simple(minimize(six_edges())).simple());
    auto uncovered = is_simple(Hypergraph::from_lists(3, {{0, 1}}));
    EXPECT_EQ(uncovered.violation, SimplicityReport::Violation::uncovered_vertex);
    EXPECT_EQ(uncovered.vertex, 2u);
    auto dup = is_simple(Hypergraph::from_lists(2, {{0, 1}, {0, 1}}));
    EXPECT_EQ(dup.violation, SimplicityReport::Violation::duplicate_edge);
}

TEST(Hypergraph, Transversals) {
    Hypergraph h = six_edges();
    EXPECT_TRUE(is_transversal(h, VertexSet(4, {1, 3})));
    EXPECT_FALSE(is_transversal(h, VertexSet(4, {0, 1})));
    EXPECT_TRUE(is_transversal(h, VertexSet::full(4)));
    EXPECT_TRUE(is_minimal_transversal(h, VertexSet(4, {1, 3})));
    EXPECT_FALSE(is_minimal_transversal(h, VertexSet(4, {0, 1, 3})));
    EXPECT_TRUE(is_minimal_transversal(Hypergraph::from_lists(1, {{0}}), VertexSet(1, {0})));
}

TEST(Hypergraph, MinimalTransversalPredicateMatchesOracle) {
    testing::rng_t rng(5);
    for (int round = 0; round < 100; ++round) {
        Hypergraph h = testing::random_hypergraph(rng, 5, 4, 0.4);
        Family tr = oracle_minimal_transversals(h);
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            std::vector<vertex_t> ids;
            for (vertex_t v = 0; v < 5; ++v) {
                if (mask >> v & 1) {
                    ids.push_back(v);
                }
            }
            VertexSet t(5, ids);
            bool listed = std::find(tr.begin(), tr.end(), t) != tr.end();
            EXPECT_EQ(is_minimal_transversal(h, t), listed);
        }
    }
}

} // namespace
} // namespace domenum
