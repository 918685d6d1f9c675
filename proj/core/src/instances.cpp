#include "crosscomp/instances.hpp"

#include <array>
#include <utility>

#include "crosscomp/errors.hpp"

namespace crosscomp {

namespace {

constexpr std::array<std::pair<Problem, std::string_view>, 14> kTags{{
    {Problem::Bare, ""},
    {Problem::Clique, "clique"},
    {Problem::IndependentSet, "is"},
    {Problem::VertexCover, "vc"},
    {Problem::Fvs, "fvs"},
    {Problem::ThreeColoring, "3col"},
    {Problem::ThreeColTsd, "3col-tsd"},
    {Problem::FvsBg6, "fvs-bg6"},
    {Problem::FvsBipartite, "fvs-bip"},
    {Problem::CliqueVc, "clique-vc"},
    {Problem::ChromVc, "chrom-vc"},
    {Problem::FvsDc, "fvs-dc"},
    {Problem::FvsDcc, "fvs-dcc"},
    {Problem::WfvsVc, "wfvs-vc"},
}};

// x and y must partition the vertex set.
std::optional<std::string> check_partition(const Graph& g, const VertexSet& x, const VertexSet& y) {
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const VertexSet* part : {&x, &y})
        for (Vertex v : *part) {
            if (v >= g.vertex_count())
                return "partition member " + std::to_string(v + 1) + " out of range";
            if (owner[v]++)
                return "vertex " + std::to_string(v + 1) + " appears in both px and py";
        }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!owner[v])
            return "vertex " + std::to_string(v + 1) + " is in neither px nor py";
    return std::nullopt;
}

std::optional<std::string> check_independent(const Graph& g, const VertexSet& side, const char* name) {
    for (Vertex u : side)
        for (Vertex v : side)
            if (u < v && g.has_edge(u, v))
                return std::string(name) + " is not independent: edge " + std::to_string(u + 1) + "-" +
                       std::to_string(v + 1);
    return std::nullopt;
}

}  // namespace

std::string_view tag(Problem p) {
    for (auto [problem, text] : kTags)
        if (problem == p)
            return text;
    return "";
}

std::optional<Problem> problem_from_tag(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    for (auto [problem, name] : kTags)
        if (name == text)
            return problem;
    return std::nullopt;
}

Problem problem_of(const AnyInstance& inst) {
    return std::visit(
        [](const auto& i) -> Problem {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, TsdInstance>)
                return Problem::ThreeColTsd;
            else
                return i.problem;
        },
        inst);
}

const Graph& graph_of(const AnyInstance& inst) {
    return std::visit([](const auto& i) -> const Graph& { return i.graph; }, inst);
}

GraphClass deletion_class(Problem target) {
    switch (target) {
    case Problem::CliqueVc:
    case Problem::ChromVc:
    case Problem::WfvsVc: return GraphClass::Edgeless;
    case Problem::FvsDc: return GraphClass::Cluster;
    case Problem::FvsDcc: return GraphClass::Cocluster;
    default: throw PreconditionError("problem '" + std::string(tag(target)) + "' has no deletion-set class");
    }
}

std::optional<std::string> check_budgeted(const BudgetedInstance& inst) {
    switch (inst.problem) {
    case Problem::Bare:
    case Problem::ThreeColoring:
        if (inst.ell)
            return std::string("problem '") + std::string(tag(inst.problem)) + "' takes no budget";
        break;
    case Problem::Clique:
    case Problem::IndependentSet:
    case Problem::VertexCover:
    case Problem::Fvs:
        if (!inst.ell)
            return "missing budget";
        if (*inst.ell < 0)
            return "negative budget";
        break;
    default: return "problem '" + std::string(tag(inst.problem)) + "' is not a classical graph problem";
    }
    if (inst.deletion_set)
        for (Vertex v : *inst.deletion_set)
            if (v >= inst.graph.vertex_count())
                return "deletion set member out of range";
    return std::nullopt;
}

std::optional<std::string> check_tsd(const TsdInstance& inst) {
    if (auto err = check_partition(inst.graph, inst.x, inst.y))
        return err;
    if (inst.y.size() % 3 != 0)
        return "py size is not a multiple of 3";
    if (auto err = check_independent(inst.graph, inst.x, "px"))
        return err;
    // graph[y] must be exactly the listed triangles.
    const auto& y = inst.y.members();
    std::size_t inside = 0;
    for (std::size_t t = 0; t < y.size(); t += 3) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (!inst.graph.has_edge(y[t + i], y[t + j]))
                    return "py does not induce vertex-disjoint triangles (triangle " + std::to_string(t / 3 + 1) +
                           " is missing an edge)";
        inside += 3;
    }
    std::size_t y_edges = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (inst.graph.has_edge(y[i], y[j]))
                ++y_edges;
    if (y_edges != inside)
        return "py does not induce vertex-disjoint triangles (edge between triangles)";
    return std::nullopt;
}

std::optional<std::string> check_bg6(const Bg6Instance& inst) {
    if (inst.problem != Problem::FvsBg6 && inst.problem != Problem::FvsBipartite)
        return "bipartite FVS instance carries problem '" + std::string(tag(inst.problem)) + "'";
    if (auto err = check_partition(inst.graph, inst.x, inst.y))
        return err;
    if (auto err = check_independent(inst.graph, inst.x, "px"))
        return err;
    if (auto err = check_independent(inst.graph, inst.y, "py"))
        return err;
    if (inst.ell < 0)
        return "negative budget";
    if (inst.problem == Problem::FvsBg6) {
        auto g = girth(inst.graph);
        if (g && *g < 6)
            return "girth " + std::to_string(*g) + " is below 6";
    }
    return std::nullopt;
}

std::optional<std::string> check_param(const ParamInstance& inst) {
    GraphClass cls;
    try {
        cls = deletion_class(inst.problem);
    } catch (const PreconditionError& e) {
        return e.what();
    }
    for (Vertex v : inst.deletion_set)
        if (v >= inst.graph.vertex_count())
            return "deletion set member out of range";
    if (inst.param_k != static_cast<std::int64_t>(inst.deletion_set.size()))
        return "parameter k differs from the deletion set size";
    if (inst.ell < 0)
        return "negative budget";
    if (!validate_deletion_set(inst.graph, inst.deletion_set, cls))
        return "deletion set does not leave a graph of the required class";
    if (inst.problem == Problem::WfvsVc) {
        if (!inst.weights)
            return "weighted instance without weights";
        if (static_cast<int>(inst.weights->size()) != inst.graph.vertex_count())
            return "weights do not cover every vertex";
        for (auto w : *inst.weights)
            if (w < 1)
                return "non-positive vertex weight";
    } else if (inst.weights) {
        return "weights given for an unweighted problem";
    }
    return std::nullopt;
}

std::optional<std::string> check_instance(const AnyInstance& inst) {
    return std::visit(
        [](const auto& i) -> std::optional<std::string> {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, BudgetedInstance>)
                return check_budgeted(i);
            else if constexpr (std::is_same_v<T, TsdInstance>)
                return check_tsd(i);
            else if constexpr (std::is_same_v<T, Bg6Instance>)
                return check_bg6(i);
            else
                return check_param(i);
        },
        inst);
}

bool decide(const AnyInstance& inst, const SolverLimits& limits) {
    if (auto err = check_instance(inst))
        throw PreconditionError("cannot decide a malformed instance: " + *err);
    const Graph& g = graph_of(inst);
    const WeightFn unit(static_cast<std::size_t>(g.vertex_count()), 1);
    if (const auto* b = std::get_if<BudgetedInstance>(&inst)) {
        switch (b->problem) {
        case Problem::Clique: return find_clique(g, static_cast<int>(*b->ell), limits).has_value();
        case Problem::IndependentSet: return find_clique(complement(g), static_cast<int>(*b->ell), limits).has_value();
        case Problem::VertexCover: return min_vertex_cover_size(g, limits) <= *b->ell;
        case Problem::Fvs: return has_fvs_within(g, unit, *b->ell, limits);
        case Problem::ThreeColoring: return has_q_colouring(g, 3, limits);
        default: throw PreconditionError("a bare graph has no verdict");
        }
    }
    if (std::holds_alternative<TsdInstance>(inst))
        return has_q_colouring(g, 3, limits);
    if (const auto* b = std::get_if<Bg6Instance>(&inst))
        return has_fvs_within(g, unit, b->ell, limits);
    const auto& p = std::get<ParamInstance>(inst);
    switch (p.problem) {
    case Problem::CliqueVc: return p.ell <= g.vertex_count() && find_clique(g, static_cast<int>(p.ell), limits).has_value();
    case Problem::ChromVc: return has_q_colouring(g, static_cast<int>(std::min<std::int64_t>(p.ell, g.vertex_count() + 1)), limits);
    case Problem::FvsDc:
    case Problem::FvsDcc: return has_fvs_within(g, unit, p.ell, limits);
    case Problem::WfvsVc: return has_fvs_within(g, *p.weights, p.ell, limits);
    default: break;
    }
    throw PreconditionError("no oracle for problem '" + std::string(tag(p.problem)) + "'");
}

}  // namespace crosscomp
