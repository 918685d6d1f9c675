#include "crosscomp/reductions.hpp"

#include <string>

#include "crosscomp/errors.hpp"

namespace crosscomp {

TsdInstance reduce_3col_to_tsd(const Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    Graph out(n);
    for (const auto& [v, text] : g.labels())
        out.set_label(v, text);
    std::vector<Vertex> x(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        x[v] = v;
    std::vector<Vertex> y;
    int index = 1;
    for (auto [u, v] : edges) {
        Vertex a = out.add_vertex("tri:" + std::to_string(index) + ":a");
        Vertex b = out.add_vertex("tri:" + std::to_string(index) + ":b");
        Vertex c = out.add_vertex("tri:" + std::to_string(index) + ":c");
        out.add_edge(a, b);
        out.add_edge(b, c);
        out.add_edge(a, c);
        out.add_edge(u, a);
        out.add_edge(v, b);
        out.add_edge(v, c);
        y.insert(y.end(), {a, b, c});
        ++index;
    }
    TsdInstance inst{std::move(out), VertexSet(std::move(x)), VertexSet(std::move(y))};
    if (auto err = check_tsd(inst))
        throw InvariantFailure("reduce_3col_to_tsd produced a malformed instance: " + *err);
    return inst;
}

Bg6Instance reduce_fvs_to_bg6(const Graph& g, std::int64_t ell) {
    Graph sub = subdivide_every_edge(g, 3);
    auto cls = classify_graph(sub);
    if (!cls.is_bipartite || (cls.girth && *cls.girth < 6))
        throw InvariantFailure("subdivided graph is not bipartite with girth >= 6");
    auto [x, y] = *cls.bipartition;
    Bg6Instance inst{Problem::FvsBg6, std::move(sub), std::move(x), std::move(y), ell};
    if (auto err = check_bg6(inst))
        throw InvariantFailure("reduce_fvs_to_bg6 produced a malformed instance: " + *err);
    return inst;
}

BudgetedInstance complement_transform(const BudgetedInstance& inst, Problem target) {
    const auto from = inst.problem;
    if (!inst.ell)
        throw PreconditionError("complement_transform needs a budget");
    const std::int64_t n = inst.graph.vertex_count();
    BudgetedInstance out;
    out.problem = target;
    out.deletion_set = inst.deletion_set;
    if (from == Problem::Clique && target == Problem::IndependentSet) {
        out.graph = complement(inst.graph);
        out.ell = inst.ell;
    } else if (from == Problem::IndependentSet && target == Problem::Clique) {
        out.graph = complement(inst.graph);
        out.ell = inst.ell;
    } else if (from == Problem::IndependentSet && target == Problem::VertexCover) {
        out.graph = inst.graph;
        out.ell = n - *inst.ell;
    } else if (from == Problem::VertexCover && target == Problem::IndependentSet) {
        out.graph = inst.graph;
        out.ell = n - *inst.ell;
    } else {
        throw PreconditionError("unsupported conversion " + std::string(tag(from)) + " -> " + std::string(tag(target)));
    }
    return out;
}

BudgetedInstance reduce_sat_to_clique(const CnfFormula& f) {
    check_formula(f);
    for (const auto& clause : f.clauses)
        if (clause.empty()) {
            BudgetedInstance no{Problem::Clique, Graph(1), 2, std::nullopt};
            return no;
        }
    struct Occurrence {
        std::size_t clause;
        int literal;
    };
    std::vector<Occurrence> occ;
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (int lit : f.clauses[c])
            occ.push_back({c, lit});
    Graph g(static_cast<int>(occ.size()));
    for (std::size_t i = 0; i < occ.size(); ++i)
        for (std::size_t j = i + 1; j < occ.size(); ++j)
            if (occ[i].clause != occ[j].clause && occ[i].literal != -occ[j].literal)
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return {Problem::Clique, std::move(g), static_cast<std::int64_t>(f.clauses.size()), std::nullopt};
}

}  // namespace crosscomp
