#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "crosscomp/errors.hpp"
#include "crosscomp/reductions.hpp"

using namespace crosscomp;

namespace {

Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

}  // namespace

TEST(ThreeColToTsd, EdgelessIsUnchanged) {
    auto r = reduce_3col_to_tsd(Graph(3));
    EXPECT_EQ(r.graph, Graph(3));
    EXPECT_EQ(r.x, (VertexSet{0, 1, 2}));
    EXPECT_TRUE(r.y.empty());
}

TEST(ThreeColToTsd, SingleEdgeWiring) {
    Graph g(2);
    g.add_edge(0, 1);
    auto r = reduce_3col_to_tsd(g);
    ASSERT_EQ(r.graph.vertex_count(), 5);
    EXPECT_EQ(r.y, (VertexSet{2, 3, 4}));
    EXPECT_TRUE(r.graph.has_edge(0, 2));
    EXPECT_TRUE(r.graph.has_edge(1, 3));
    EXPECT_TRUE(r.graph.has_edge(1, 4));
    EXPECT_FALSE(r.graph.has_edge(0, 1));
    EXPECT_EQ(r.graph.edge_count(), 6u);
}

TEST(ThreeColToTsd, K4StaysNo) {
    auto r = reduce_3col_to_tsd(complete(4));
    EXPECT_EQ(r.graph.vertex_count(), 4 + 3 * 6);
    EXPECT_FALSE(has_q_colouring(r.graph, 3));
}

TEST(ThreeColToTsd, ExhaustiveUpToFour) {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t mask = 0; mask < brute::graph_count(n); ++mask) {
            Graph g = brute::graph_from_mask(n, mask);
            auto r = reduce_3col_to_tsd(g);
            ASSERT_FALSE(check_tsd(r));
            ASSERT_EQ(r.graph.vertex_count(), n + 3 * static_cast<int>(g.edge_count()));
            ASSERT_EQ(brute::colourable(g, 3), has_q_colouring(r.graph, 3)) << "mask " << mask;
        }
}

TEST(FvsToBg6, TriangleAndForest) {
    auto r = reduce_fvs_to_bg6(complete(3), 1);
    EXPECT_EQ(r.graph.vertex_count(), 12);
    EXPECT_EQ(r.ell, 1);
    EXPECT_FALSE(check_bg6(r));
    EXPECT_EQ(min_fvs_size(r.graph).value, 1);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto f = reduce_fvs_to_bg6(path, 0);
    EXPECT_TRUE(decide(f));
}

TEST(FvsToBg6, PreservesMinimumUpToSix) {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < brute::graph_count(n); mask += (n == 6 ? 7 : 1)) {
            Graph g = brute::graph_from_mask(n, mask);
            auto r = reduce_fvs_to_bg6(g, 0);
            ASSERT_FALSE(check_bg6(r));
            ASSERT_EQ(min_fvs_size(r.graph).value, brute::min_fvs(g)) << "mask " << mask;
        }
}

TEST(Complement, Examples) {
    BudgetedInstance k3{Problem::Clique, complete(3), 3, std::nullopt};
    auto is = complement_transform(k3, Problem::IndependentSet);
    EXPECT_EQ(is.problem, Problem::IndependentSet);
    EXPECT_EQ(is.graph, Graph(3));
    EXPECT_EQ(is.ell, 3);
    EXPECT_TRUE(decide(k3));
    EXPECT_TRUE(decide(is));

    Graph c5(5);
    for (int i = 0; i < 5; ++i)
        c5.add_edge(i, (i + 1) % 5);
    BudgetedInstance is2{Problem::IndependentSet, c5, 2, VertexSet{0, 2}};
    auto vc = complement_transform(is2, Problem::VertexCover);
    EXPECT_EQ(vc.ell, 3);
    EXPECT_EQ(vc.graph, c5);
    EXPECT_EQ(vc.deletion_set, is2.deletion_set);
    EXPECT_TRUE(decide(vc));
}

TEST(Complement, VerdictsAgreeAndRoundTrip) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 7;
        Graph g = brute::random_graph(rng, n, 0.5);
        BudgetedInstance clique{Problem::Clique, g, 1 + i % n, std::nullopt};
        auto is = complement_transform(clique, Problem::IndependentSet);
        auto vc = complement_transform(is, Problem::VertexCover);
        const bool expected = brute::max_clique(g) >= *clique.ell;
        EXPECT_EQ(decide(clique), expected);
        EXPECT_EQ(decide(is), expected);
        EXPECT_EQ(decide(vc), expected);
        EXPECT_EQ(complement_transform(is, Problem::Clique), clique);
        EXPECT_EQ(complement_transform(vc, Problem::IndependentSet), is);
    }
}

TEST(Complement, UnsupportedPair) {
    BudgetedInstance fvs{Problem::Fvs, Graph(2), 1, std::nullopt};
    EXPECT_THROW(complement_transform(fvs, Problem::Clique), PreconditionError);
}

TEST(SatToClique, Examples) {
    auto one = reduce_sat_to_clique(CnfFormula{1, {{1}}});
    EXPECT_EQ(one.graph.vertex_count(), 1);
    EXPECT_EQ(one.ell, 1);
    EXPECT_TRUE(decide(one));

    auto two = reduce_sat_to_clique(CnfFormula{1, {{1}, {-1}}});
    EXPECT_EQ(two.graph.vertex_count(), 2);
    EXPECT_EQ(two.graph.edge_count(), 0u);
    EXPECT_EQ(two.ell, 2);
    EXPECT_FALSE(decide(two));

    auto empty = reduce_sat_to_clique(CnfFormula{2, {{1}, {}}});
    EXPECT_EQ(empty.graph.vertex_count(), 1);
    EXPECT_EQ(empty.ell, 2);
}

TEST(SatToClique, MatchesTruthTable) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        CnfFormula f = brute::random_3cnf(rng, 1 + i % 4, 1 + i % 5);
        auto r = reduce_sat_to_clique(f);
        EXPECT_EQ(r.ell, static_cast<std::int64_t>(f.clauses.size()));
        EXPECT_EQ(brute::max_clique(r.graph) >= *r.ell, brute::satisfiable(f));
    }
}

TEST(MergeProperty, OddCycleInNeighbourhoodSeparatesColours) {
    // Non-adjacent u, v whose joint neighbourhood holds an odd cycle never
    // share a colour in a proper 3-colouring.
    for (int n = 3; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < brute::graph_count(n); ++mask) {
            Graph g = brute::graph_from_mask(n, mask);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v))
                        continue;
                    std::vector<Vertex> nb;
                    for (int w = 0; w < n; ++w)
                        if (w != u && w != v && (g.has_edge(u, w) || g.has_edge(v, w)))
                            nb.push_back(w);
                    if (is_bipartite(induced_subgraph(g, VertexSet(nb))))
                        continue;
                    brute::for_each_colouring(g, 3, [&](const std::vector<int>& c) { ASSERT_NE(c[u], c[v]); });
                }
        }
}
