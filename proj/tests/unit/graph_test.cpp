#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "crosscomp/errors.hpp"
#include "crosscomp/graph.hpp"

using namespace crosscomp;

namespace {

Graph cycle(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

}  // namespace

TEST(Graph, AddEdgeIsIdempotentAndSymmetric) {
    Graph g(3);
    g.add_edge(2, 0);
    g.add_edge(0, 2);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
    Graph g(2);
    EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
    EXPECT_THROW(g.add_edge(0, 2), PreconditionError);
}

TEST(Graph, LabelsDoNotAffectEquality) {
    Graph a = complete(3), b = complete(3);
    a.set_label(0, "hub");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.label(0), "hub");
    EXPECT_FALSE(b.label(0));
}

TEST(Complement, TriangleAndSingleton) {
    EXPECT_EQ(complement(complete(3)), Graph(3));
    EXPECT_EQ(complement(Graph(1)), Graph(1));
}

TEST(Complement, Involution) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Graph g = brute::random_graph(rng, 1 + i % 8, 0.4);
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(Subdivide, TriangleBecomesTwelveCycle) {
    Graph s = subdivide_every_edge(complete(3), 3);
    EXPECT_EQ(s.vertex_count(), 12);
    EXPECT_EQ(s.edge_count(), 12u);
    auto c = classify_graph(s);
    EXPECT_TRUE(c.is_bipartite);
    EXPECT_EQ(c.girth, 12);
}

TEST(Subdivide, SingleEdgeIsPathOnFive) {
    Graph g(2);
    g.add_edge(0, 1);
    Graph s = subdivide_every_edge(g, 3);
    EXPECT_EQ(s.vertex_count(), 5);
    EXPECT_EQ(s.edge_count(), 4u);
    EXPECT_TRUE(is_forest(s));
    EXPECT_FALSE(s.has_edge(0, 1));
}

TEST(Subdivide, GirthTimesFourAndBipartite) {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < brute::graph_count(n); ++mask) {
            Graph g = brute::graph_from_mask(n, mask);
            Graph s = subdivide_every_edge(g, 3);
            ASSERT_EQ(s.vertex_count(), n + 3 * static_cast<int>(g.edge_count()));
            if (g.edge_count() > 0)
                ASSERT_TRUE(is_bipartite(s));
            auto before = girth(g), after = girth(s);
            ASSERT_EQ(before.has_value(), after.has_value());
            if (before)
                ASSERT_EQ(*after, 4 * *before) << "mask " << mask;
        }
}

TEST(Identify, TwoEdgesShareAnEndpoint) {
    Graph e(2);
    e.add_edge(0, 1);
    std::vector<Graph> gs{e, e};
    std::vector<VertexSet> sets{VertexSet{1}, VertexSet{1}};
    auto id = identify_vertex_sets(gs, sets);
    EXPECT_EQ(id.graph.vertex_count(), 3);
    EXPECT_EQ(id.graph.edge_count(), 2u);
    ASSERT_EQ(id.merged.size(), 1u);
    EXPECT_EQ(id.graph.degree(id.merged[0]), 2);
}

TEST(Identify, SingleInputIsUnchanged) {
    Graph g = cycle(4);
    std::vector<Graph> gs{g};
    std::vector<VertexSet> sets{VertexSet{1, 3}};
    auto id = identify_vertex_sets(gs, sets);
    EXPECT_TRUE(are_isomorphic_small(id.graph, g));
    EXPECT_EQ(id.merged.size(), 2u);
}

TEST(Identify, FourCyclesKeepTheirShape) {
    Graph g = cycle(4);
    std::vector<Graph> gs{g, g};
    std::vector<VertexSet> sets{VertexSet{0, 2}, VertexSet{1, 3}};
    auto id = identify_vertex_sets(gs, sets);
    ASSERT_EQ(id.graph.vertex_count(), 6);
    // Layout: X_1 = {0, 1}, X_2 = {2, 3}, then y_1, y_2.
    for (int i = 0; i < 2; ++i) {
        VertexSet keep{2 * i, 2 * i + 1, id.merged[0], id.merged[1]};
        EXPECT_TRUE(are_isomorphic_small(induced_subgraph(id.graph, keep), g));
    }
}

TEST(Identify, VertexCountFormula) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int t = 1 + trial % 4, n = 4 + trial % 3, r = 1 + trial % 3;
        std::vector<Graph> gs;
        std::vector<VertexSet> sets;
        for (int i = 0; i < t; ++i) {
            gs.push_back(brute::random_graph(rng, n, 0.5));
            std::vector<Vertex> members(static_cast<std::size_t>(n));
            std::iota(members.begin(), members.end(), 0);
            std::shuffle(members.begin(), members.end(), rng);
            members.resize(static_cast<std::size_t>(r));
            sets.emplace_back(members);
        }
        EXPECT_EQ(identify_vertex_sets(gs, sets).graph.vertex_count(), t * (n - r) + r);
    }
}

TEST(Identify, RejectsUnequalSets) {
    std::vector<Graph> gs{Graph(2), Graph(2)};
    std::vector<VertexSet> sets{VertexSet{0}, VertexSet{0, 1}};
    EXPECT_THROW(identify_vertex_sets(gs, sets), PreconditionError);
    std::vector<VertexSet> bad{VertexSet{0}, VertexSet{5}};
    EXPECT_THROW(identify_vertex_sets(gs, bad), PreconditionError);
}

TEST(Classify, Examples) {
    std::vector<Graph> parts{complete(3), complete(2)};
    Graph k3k2 = disjoint_union(parts);
    auto c = classify_graph(k3k2);
    EXPECT_TRUE(c.is_cluster);
    EXPECT_EQ(c.girth, 3);
    EXPECT_TRUE(classify_graph(complement(k3k2)).is_cocluster);

    auto c5 = classify_graph(cycle(5));
    EXPECT_FALSE(c5.is_bipartite);
    EXPECT_FALSE(c5.is_cluster);
    EXPECT_EQ(c5.girth, 5);
}

TEST(Classify, EmptyGraphIsInEveryClass) {
    auto c = classify_graph(Graph(0));
    EXPECT_TRUE(c.is_bipartite);
    EXPECT_TRUE(c.is_cluster);
    EXPECT_TRUE(c.is_cocluster);
    EXPECT_FALSE(c.girth);
}

TEST(Classify, BipartitionIsValid) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        Graph g = brute::random_graph(rng, 7, 0.25);
        auto c = classify_graph(g);
        EXPECT_EQ(c.is_cluster, brute::is_cluster(g));
        EXPECT_EQ(c.is_cocluster, brute::is_cluster(complement(g)));
        if (!c.is_bipartite)
            continue;
        ASSERT_TRUE(c.bipartition);
        const auto& [x, y] = *c.bipartition;
        EXPECT_EQ(static_cast<int>(x.size() + y.size()), g.vertex_count());
        for (auto [u, v] : g.edges())
            EXPECT_NE(x.contains(u), x.contains(v));
    }
}

TEST(DeletionSet, Examples) {
    EXPECT_TRUE(validate_deletion_set(complete(3), VertexSet{0, 2}, GraphClass::Edgeless));
    EXPECT_FALSE(validate_deletion_set(cycle(4), VertexSet{}, GraphClass::Cluster));
    EXPECT_TRUE(validate_deletion_set(cycle(4), VertexSet{}, GraphClass::Cocluster));
}

TEST(DeletionSet, AgreesWithClassification) {
    std::mt19937_64 rng(3);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < 100; ++i) {
        Graph g = brute::random_graph(rng, 6, 0.5);
        std::vector<Vertex> z;
        for (int v = 0; v < 6; ++v)
            if (coin(rng))
                z.push_back(v);
        VertexSet zs(z);
        auto c = classify_graph(remove_vertices(g, zs));
        EXPECT_EQ(validate_deletion_set(g, zs, GraphClass::Cluster), c.is_cluster);
        EXPECT_EQ(validate_deletion_set(g, zs, GraphClass::Cocluster), c.is_cocluster);
        EXPECT_EQ(validate_deletion_set(g, zs, GraphClass::Edgeless), remove_vertices(g, zs).edge_count() == 0);
        std::vector<Vertex> all(6);
        std::iota(all.begin(), all.end(), 0);
        for (auto cls : {GraphClass::Edgeless, GraphClass::Cluster, GraphClass::Cocluster})
            EXPECT_TRUE(validate_deletion_set(g, VertexSet(all), cls));
    }
}

TEST(Isomorphism, RefusesLargeInputs) {
    EXPECT_THROW(are_isomorphic_small(Graph(9), Graph(9)), PreconditionError);
    EXPECT_TRUE(are_isomorphic_small(cycle(5), complement(cycle(5))));
    EXPECT_FALSE(are_isomorphic_small(cycle(4), complete(4)));
}

TEST(Components, AscendingLists) {
    Graph g(5);
    g.add_edge(3, 1);
    g.add_edge(0, 4);
    auto cs = connected_components(g);
    EXPECT_EQ(cs, (std::vector<std::vector<Vertex>>{{0, 4}, {1, 3}, {2}}));
}
