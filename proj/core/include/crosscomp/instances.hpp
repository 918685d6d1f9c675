#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "crosscomp/graph.hpp"
#include "crosscomp/oracles.hpp"

namespace crosscomp {

/// Problem tags as they appear in "prob" stanzas and manifests.
enum class Problem {
    Bare,            ///< graph without a question
    Clique,          ///< "clique"
    IndependentSet,  ///< "is"
    VertexCover,     ///< "vc"
    Fvs,             ///< "fvs"
    ThreeColoring,   ///< "3col"
    ThreeColTsd,     ///< "3col-tsd": 3-colouring with triangle split decomposition
    FvsBg6,          ///< "fvs-bg6": FVS on bipartite graphs of girth >= 6
    FvsBipartite,    ///< "fvs-bip": FVS on bipartite graphs
    CliqueVc,        ///< "clique-vc"
    ChromVc,         ///< "chrom-vc"
    FvsDc,           ///< "fvs-dc": deletion distance to cluster graphs
    FvsDcc,          ///< "fvs-dcc": deletion distance to co-cluster graphs
    WfvsVc,          ///< "wfvs-vc"
};

std::string_view tag(Problem p);
std::optional<Problem> problem_from_tag(std::string_view text);

/// Classical instance (G, ell). `ell` is absent for 3-colouring and bare graphs.
struct BudgetedInstance {
    Problem problem = Problem::Bare;
    Graph graph;
    std::optional<std::int64_t> ell;
    /// Optional deletion-set annotation carried through complement transforms.
    std::optional<VertexSet> deletion_set;

    friend bool operator==(const BudgetedInstance&, const BudgetedInstance&) = default;
};

/// 3-colouring with a triangle split decomposition. `y` lists the triangles
/// grouped as (a_1, b_1, c_1, a_2, ...).
struct TsdInstance {
    Graph graph;
    VertexSet x;
    VertexSet y;

    int triangle_count() const { return static_cast<int>(y.size() / 3); }
    friend bool operator==(const TsdInstance&, const TsdInstance&) = default;
};

/// FVS on a bipartite graph with bipartition (x, y). With problem FvsBg6 the
/// girth must be at least 6; FvsBipartite drops the girth requirement.
struct Bg6Instance {
    Problem problem = Problem::FvsBg6;
    Graph graph;
    VertexSet x;
    VertexSet y;
    std::int64_t ell = 0;

    friend bool operator==(const Bg6Instance&, const Bg6Instance&) = default;
};

/// Parameterized instance (G, Z, ell, k) of one of the five composition targets.
struct ParamInstance {
    Problem problem = Problem::CliqueVc;
    Graph graph;
    VertexSet deletion_set;
    std::int64_t ell = 0;
    std::optional<WeightFn> weights;  ///< WFVS-VC only
    std::int64_t param_k = 0;

    friend bool operator==(const ParamInstance&, const ParamInstance&) = default;
};

using AnyInstance = std::variant<BudgetedInstance, TsdInstance, Bg6Instance, ParamInstance>;

Problem problem_of(const AnyInstance& inst);
const Graph& graph_of(const AnyInstance& inst);

/// Class whose membership the deletion set certifies for a target problem.
GraphClass deletion_class(Problem target);

/// Structural checks; each returns a description of the first violation.
std::optional<std::string> check_budgeted(const BudgetedInstance& inst);
std::optional<std::string> check_tsd(const TsdInstance& inst);
std::optional<std::string> check_bg6(const Bg6Instance& inst);
std::optional<std::string> check_param(const ParamInstance& inst);
std::optional<std::string> check_instance(const AnyInstance& inst);

/// YES/NO verdict from the matching exact oracle.
bool decide(const AnyInstance& inst, const SolverLimits& limits = {});

}  // namespace crosscomp
