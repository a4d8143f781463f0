#include <gtest/gtest.h>

#include <domenum/oracles.hpp>
#include <domenum/reductions.hpp>
#include <domenum/split_enum.hpp>
#include <domenum/trans_enum.hpp>

#include "support/generators.hpp"

namespace domenum {
namespace {

// a=0, b=1, s1=2, s2=3 with edges a-b, a-s1, b-s2
Graph two_leaves() { return Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}); }

SplitPartition two_leaves_partition() { return {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}; }

Family run_split(const Graph& g, const SplitPartition& p, const EnumerationOrder& sigma) {
    return collect([&](VertexSetStream& out) { dominant_split(g, p, sigma, out); });
}

TEST(Privates, Examples) {
    Graph g = two_leaves();
    auto p = two_leaves_partition();
    EXPECT_TRUE(clique_part_has_all_privates(g, p, VertexSet(4, {})));
    EXPECT_TRUE(clique_part_has_all_privates(g, p, VertexSet(4, {0, 1})));
    // C={a,b}, S={s} with s adjacent to both
    Graph shared(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    SplitPartition q{VertexSet(3, {0, 1}), VertexSet(3, {2})};
    EXPECT_FALSE(clique_part_has_all_privates(shared, q, VertexSet(3, {0, 1})));
    EXPECT_TRUE(clique_part_has_all_privates(shared, q, VertexSet(3, {0})));
    EXPECT_THROW(clique_part_has_all_privates(g, p, VertexSet(4, {2})), invalid_partition);
}

TEST(DominantSplit, EmissionOrder) {
    Family got = run_split(two_leaves(), two_leaves_partition(), EnumerationOrder::identity(4));
    Family expected{VertexSet(4, {2, 3}), VertexSet(4, {0, 3}), VertexSet(4, {0, 1}), VertexSet(4, {1, 2})};
    EXPECT_EQ(got, expected);
}

TEST(DominantSplit, EdgelessGraphEmitsOnlyTheIndependentSide) {
    Graph g(5);
    Family got = run_split(g, {VertexSet(5, {}), VertexSet::full(5)}, EnumerationOrder::identity(5));
    EXPECT_EQ(got, Family{VertexSet::full(5)});
}

TEST(DominantSplit, SixEdgeSplitIncidence) {
    Hypergraph h = minimize(Hypergraph::from_lists(4, {{0, 1}, {0, 1, 2}, {0, 2, 3}, {1, 3}, {2, 3}, {1, 3}}));
    Graph g = split_incidence(h).graph;
    ASSERT_EQ(g.vertex_count(), 7u);
    auto p = split_partition(g);
    ASSERT_TRUE(p);
    Family got = run_split(g, *p, EnumerationOrder::identity(7));
    EXPECT_EQ(canonical(got), canonical(oracle_minimal_dominating_sets(g)));
}

TEST(DominantSplit, RejectsNonMaximalPartitions) {
    Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
    EXPECT_THROW(DominantSplit(p3, {VertexSet(3, {0, 1}), VertexSet(3, {2})}, EnumerationOrder::identity(3)),
                 invalid_partition);
    EXPECT_THROW(DominantSplit(p3, {VertexSet(3, {1}), VertexSet(3, {0, 2})}, EnumerationOrder::identity(2)),
                 invalid_vertex);
}

TEST(DominantSplit, BijectionWithPrivateCliqueSubsets) {
    testing::rng_t rng(67);
    for (int round = 0; round < 200; ++round) {
        auto inst = testing::random_split_graph(rng, 9, 1 + round % 5, 0.4);
        auto p = split_partition(inst.graph);
        ASSERT_TRUE(p);
        Family got = run_split(inst.graph, *p, EnumerationOrder::identity(9));
        EXPECT_EQ(canonical(got), canonical(oracle_minimal_dominating_sets(inst.graph)));
        // D -> D ∩ C is injective and hits exactly the private-respecting subsets
        std::set<VertexSet> images;
        for (const auto& d : got) {
            VertexSet a = set_intersection(d, p->clique);
            EXPECT_TRUE(clique_part_has_all_privates(inst.graph, *p, a));
            EXPECT_TRUE(images.insert(a).second);
        }
        std::size_t valid = 0;
        const std::size_t k = p->clique.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<vertex_t> ids;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1) {
                    ids.push_back(p->clique[i]);
                }
            }
            valid += clique_part_has_all_privates(inst.graph, *p, VertexSet(9, ids));
        }
        EXPECT_EQ(images.size(), valid);
    }
}

TEST(DominantSplit, AnyOrderGivesTheSameFamily) {
    testing::rng_t rng(71);
    for (int round = 0; round < 100; ++round) {
        auto inst = testing::random_split_graph(rng, 12, 5, 0.3);
        auto p = split_partition(inst.graph);
        ASSERT_TRUE(p);
        std::vector<vertex_t> seq(12);
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        VertexSetStream stream;
        stream.reject_duplicates();
        dominant_split(inst.graph, *p, EnumerationOrder::from_sequence(seq), stream);
        EXPECT_EQ(canonical(run_split(inst.graph, *p, EnumerationOrder::from_sequence(seq))),
                  canonical(run_split(inst.graph, *p, EnumerationOrder::identity(12))));
    }
}

TEST(DominantSplit, StopsAtTheLimit) {
    Family got;
    VertexSetStream stream([&](const VertexSet& s) { got.push_back(s); }, 2);
    dominant_split(two_leaves(), two_leaves_partition(), stream);
    EXPECT_EQ(got.size(), 2u);
    EXPECT_TRUE(stream.stopped());
}

TEST(EnumerationOrder, Validation) {
    EXPECT_THROW(EnumerationOrder::from_sequence({0, 0, 1}), invalid_vertex);
    EXPECT_THROW(EnumerationOrder::from_sequence({0, 3, 1}), invalid_vertex);
    auto order = EnumerationOrder::from_sequence({2, 0, 1});
    EXPECT_EQ(order.rank(2), 1u);
    EXPECT_EQ(order.rank(1), 3u);
}

// Path 0..5 with a leaf 6 on 2 and a leaf 7 on 3: chordal, holds an induced
// P6, and its completion is split.
Graph tree_with_p6() {
    return Graph(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}});
}

TEST(P6FreeChordal, Examples) {
    Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
    Family got = collect([&](VertexSetStream& out) { dom_enum_p6_chordal(p3, out); });
    EXPECT_EQ(canonical(got), (Family{VertexSet(3, {0, 2}), VertexSet(3, {1})}));

    testing::rng_t rng(73);
    for (int round = 0; round < 50; ++round) {
        auto inst = testing::random_split_graph(rng, 9, 3, 0.5);
        auto p = split_partition(inst.graph);
        Family direct = collect([&](VertexSetStream& out) { dominant_split(inst.graph, *p, out); });
        Family chordal = collect([&](VertexSetStream& out) { dom_enum_p6_chordal(inst.graph, out); });
        EXPECT_EQ(direct, chordal);
    }
}

TEST(P6FreeChordal, PreconditionsCarryWitnesses) {
    Graph c4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    try {
        collect([&](VertexSetStream& out) { dom_enum_p6_chordal(c4, out); });
        FAIL() << "expected precondition_error";
    } catch (const precondition_error& e) {
        EXPECT_EQ(e.witness().size(), 4u);
    }
    Graph tree = tree_with_p6();
    try {
        collect([&](VertexSetStream& out) { dom_enum_p6_chordal(tree, out); });
        FAIL() << "expected precondition_error";
    } catch (const precondition_error& e) {
        EXPECT_EQ(e.witness().size(), 6u);
    }
}

TEST(P6FreeChordal, CompletionRouteCoversChordalGraphsWithP6) {
    Graph tree = tree_with_p6();
    EXPECT_EQ(classify_redundancy(tree).irredundant, VertexSet(8, {0, 5, 6, 7}));
    Family got = collect([&](VertexSetStream& out) {
        dom_enum_via_completion(tree, EnumerationOrder::identity(8), out);
    });
    EXPECT_EQ(canonical(got), canonical(oracle_minimal_dominating_sets(tree)));
}

TEST(DelayCounting, RecordsGapsAndPreprocessing) {
    VertexSetStream stream;
    stream.tick(5);
    stream.emit(VertexSet(1, {0}));
    stream.tick(3);
    stream.emit(VertexSet(1, {}));
    stream.tick(7);
    stream.finish();
    const auto& st = stream.stats();
    EXPECT_EQ(st.count, 2u);
    EXPECT_EQ(st.preprocessing, 5u);
    EXPECT_EQ(st.max_delay, 7u);
    EXPECT_EQ(st.gaps, 2u);
    EXPECT_DOUBLE_EQ(st.mean_delay(), 5.0);
    EXPECT_EQ(st.total_ops, 15u);
}

TEST(DelayCounting, DuplicateRejection) {
    VertexSetStream stream;
    stream.reject_duplicates();
    stream.emit(VertexSet(2, {1}));
    EXPECT_THROW(stream.emit(VertexSet(2, {1})), contract_violation);
}

} // namespace
} // namespace domenum
