#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crosscomp/instances.hpp"

namespace crosscomp {

/// The K4-in-a-box gadget: K4 on {a,b,c,d} = {0,1,2,3} plus one degree-2
/// vertex on each of the pairs ab, bc, cd, da (ids 4..7). Its only minimum
/// feedback vertex sets are the 0-terminals {a,c} and the 1-terminals {b,d}.
struct Bk4Gadget {
    Graph graph;
    VertexSet terminals0;
    VertexSet terminals1;
};

Bk4Gadget build_bk4();

/// Hub 0 joined to every vertex of the cycle 1..rim.
Graph odd_wheel(int rim);

/// Class signature under a problem's polynomial equivalence relation.
struct EquivalenceKey {
    bool malformed = false;
    std::vector<std::int64_t> signature;

    friend auto operator<=>(const EquivalenceKey&, const EquivalenceKey&) = default;
};

std::string to_string(const EquivalenceKey& key);

/// Total. Signatures: clique (n, l); is (n, m, l); 3col-tsd (n, m);
/// fvs-bg6 / fvs-bip (|X|, |Y|, l). Anything failing its structural check, or
/// of another problem, is Malformed.
EquivalenceKey equivalence_key(Problem source, const AnyInstance& inst);

/// Groups by key, keeping input order inside each group.
std::map<EquivalenceKey, std::vector<AnyInstance>> partition_instances(Problem source,
                                                                       std::span<const AnyInstance> batch);

/// Size measure for the class-count bound: |V| + |E| + 1.
std::size_t instance_size(const AnyInstance& inst);

enum class Construction { CliqueVc, ChromVc, FvsDcc, FvsDc, WfvsVc };

std::string_view tag(Construction c);
std::optional<Construction> construction_from_tag(std::string_view text);
Problem source_problem(Construction c);
Problem target_problem(Construction c);

struct FormulaReport {
    int t_input = 0;  ///< batch size before padding
    int t = 0;        ///< after padding
    int n = 0;        ///< |V| (clique, is), |X| (tsd, bipartite fvs)
    int m = 0;        ///< edges (is) or triangles (tsd)
    int y = 0;        ///< |Y| for bipartite fvs
    std::int64_t ell = 0;
    int log_t = 0;
    std::int64_t expected_ell_prime = 0;
    std::int64_t expected_k_prime = 0;
    bool canonical_no = false;  ///< malformed batch answered by the constant NO instance
};

/// Inclusive id range [first, last]; empty when first > last.
struct GadgetRange {
    std::string label;
    Vertex first = 0;
    Vertex last = -1;
};

struct CompositionOutput {
    ParamInstance instance;
    FormulaReport report;
    std::vector<GadgetRange> gadget_index;
};

/// Constant-size instances of each target problem.
ParamInstance canonical_no_instance(Problem target);
ParamInstance canonical_yes_instance(Problem target);

/// CLIQUE into CLIQUE parameterized by vertex cover. Layout: D (three vertices
/// per pair p<q), then C (l*n selection vertices, row-major), then B.
CompositionOutput compose_clique_vc(std::span<const BudgetedInstance> batch);

/// 3-colouring with triangle split decomposition into CHROMATIC NUMBER
/// parameterized by vertex cover. Layout: palette (p_1..p_L, w, x, y, z),
/// selector pairs, shared triangles T*, then X_1..X_t.
CompositionOutput compose_chromatic_vc(std::span<const TsdInstance> batch, int max_t = 64);

/// FVS on bipartite graphs of girth >= 6 into FVS parameterized by deletion
/// distance to co-cluster graphs. Layout: X_1..X_t, then Y*.
CompositionOutput compose_fvs_cocluster(std::span<const Bg6Instance> batch);

/// INDEPENDENT SET into FVS parameterized by deletion distance to cluster
/// graphs. Layout: n instance selectors of L gadgets each, edge checkers, B.
CompositionOutput compose_fvs_cluster(std::span<const BudgetedInstance> batch);

/// FVS on bipartite graphs into weighted FVS parameterized by vertex cover.
/// Layout: L gadgets, X_1..X_t, Y*.
CompositionOutput compose_wfvs_vc(std::span<const Bg6Instance> batch);

/// Dispatches on the construction; members must be of its source type.
CompositionOutput compose(Construction c, std::span<const AnyInstance> batch);

/// Bit j (1 = most significant) of instance number i in 1..t, with t encoded
/// as all zeros.
int instance_bit(int i, int t, int j);

}  // namespace crosscomp
