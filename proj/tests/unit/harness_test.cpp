#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "crosscomp/errors.hpp"
#include "crosscomp/harness.hpp"

using namespace crosscomp;

namespace {

Graph complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST(Verify, CliqueExample) {
    std::vector<AnyInstance> batch{BudgetedInstance{Problem::Clique, complete(3), 3, std::nullopt},
                                   BudgetedInstance{Problem::Clique, path(3), 3, std::nullopt}};
    auto r = verify_or_equivalence(Construction::CliqueVc, batch);
    EXPECT_TRUE(r.or_match);
    EXPECT_TRUE(r.composed_verdict);
    EXPECT_EQ(r.input_verdicts, (std::vector<bool>{true, false}));
    EXPECT_TRUE(r.audit.ok());
    EXPECT_FALSE(format_report(r).empty());
    const std::string record = tsv_record(r), header = tsv_header();
    EXPECT_EQ(std::count(record.begin(), record.end(), '\t'), std::count(header.begin(), header.end(), '\t'));
}

TEST(Verify, AcyclicFvsDcc) {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    Bg6Instance forest{Problem::FvsBg6, g, VertexSet{0, 1}, VertexSet{2, 3}, 0};
    std::vector<AnyInstance> batch{forest, forest};
    auto r = verify_or_equivalence(Construction::FvsDcc, batch);
    EXPECT_EQ(r.input_verdicts, (std::vector<bool>{true, true}));
    EXPECT_TRUE(r.composed_verdict);
    EXPECT_TRUE(r.or_match);
}

TEST(Verify, EmptyBatch) {
    EXPECT_THROW(verify_or_equivalence(Construction::WfvsVc, std::vector<AnyInstance>{}), PreconditionError);
}

TEST(Audit, ClosedFormExamples) {
    std::vector<AnyInstance> clique{BudgetedInstance{Problem::Clique, complete(3), 2, std::nullopt},
                                    BudgetedInstance{Problem::Clique, path(3), 2, std::nullopt},
                                    BudgetedInstance{Problem::Clique, Graph(3), 2, std::nullopt}};
    auto in = audit_inputs(Construction::CliqueVc, clique);
    auto cf = closed_form(in.construction, in.t, in.key, in.max_input_size);
    EXPECT_EQ(cf.k_prime, 15);
    EXPECT_EQ(cf.ell_prime, 6);

    BudgetedInstance edge{Problem::IndependentSet, path(2), 1, std::nullopt};
    std::vector<AnyInstance> dc{edge, edge};
    auto a = audit_parameter_bound(audit_inputs(Construction::FvsDc, dc), compose(Construction::FvsDc, dc));
    EXPECT_EQ(a.expected_k, 18);
    EXPECT_EQ(a.expected_ell, 13);
    EXPECT_TRUE(a.ok());

    Graph c4(4);
    for (int i = 0; i < 4; ++i)
        c4.add_edge(i, (i + 1) % 4);
    Bg6Instance bip{Problem::FvsBipartite, c4, VertexSet{0, 2}, VertexSet{1, 3}, 1};
    std::vector<AnyInstance> wf{bip, bip};
    auto w = audit_parameter_bound(audit_inputs(Construction::WfvsVc, wf), compose(Construction::WfvsVc, wf));
    EXPECT_EQ(w.expected_k, 10);
    EXPECT_EQ(w.expected_ell, 11);
    EXPECT_TRUE(w.ok());
    EXPECT_EQ(w, audit_parameter_bound(audit_inputs(Construction::WfvsVc, wf), compose(Construction::WfvsVc, wf)));
}

TEST(Audit, DetectsTampering) {
    std::mt19937_64 rng(71);
    auto batch = random_clique_batch(rng);
    auto out = compose(Construction::CliqueVc, batch);
    out.instance.ell += 1;
    EXPECT_FALSE(audit_parameter_bound(audit_inputs(Construction::CliqueVc, batch), out).formula_match);
}

TEST(Gadgets, SuitePasses) {
    auto r = run_gadget_suite();
    EXPECT_EQ(r.checks.size(), 7u);
    for (const auto& c : r.checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        EXPECT_EQ(c.passed, !c.counterexample.has_value());
    }
    EXPECT_TRUE(r.all_passed());
}

TEST(Suite, SmallGridIsDeterministic) {
    auto a = run_suite(9, Grid::Small);
    auto b = run_suite(9, Grid::Small);
    EXPECT_TRUE(a.all_passed());
    EXPECT_EQ(a.records.size(), b.records.size());
    ASSERT_EQ(a.sections.size(), b.sections.size());
    for (std::size_t i = 0; i < a.sections.size(); ++i) {
        EXPECT_EQ(a.sections[i].name, b.sections[i].name);
        EXPECT_EQ(a.sections[i].yes_batches, b.sections[i].yes_batches);
        EXPECT_EQ(a.sections[i].or_matches, b.sections[i].or_matches);
    }
}

TEST(Verify, ComposedVerdictsAgreeWithEnumeration) {
    std::mt19937_64 rng(72);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 12; ++i) {
        const bool weighted = i % 2 == 0;
        auto batch = weighted ? random_bipartite_batch(rng) : random_bg6_batch(rng);
        const auto c = weighted ? Construction::WfvsVc : Construction::FvsDcc;
        auto out = compose(c, batch);
        const auto& g = out.instance.graph;
        if (g.vertex_count() > 20)
            continue;
        const WeightFn w = out.instance.weights.value_or(WeightFn(static_cast<std::size_t>(g.vertex_count()), 1));
        const bool expected = brute::min_weight_fvs(g, w) <= out.instance.ell;
        EXPECT_EQ(verify_or_equivalence(c, batch).composed_verdict, expected) << tag(c) << " batch " << i;
        ++checked;
    }
    EXPECT_GE(checked, 6);
}
