#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crosscomp/cnf.hpp"
#include "crosscomp/graph.hpp"

namespace crosscomp {

/// Vertex weights indexed by vertex id; every entry must be positive.
using WeightFn = std::vector<std::int64_t>;

/// Input ceilings for the exponential-time solvers. Oversized inputs raise
/// SizeGuardError instead of running.
struct SolverLimits {
    int clique_max_vertices = 40;
    int coloring_max_vertices = 40;
    int fvs_max_vertices = 64;
    int cnf_max_variables = 24;
};

struct CliqueResult {
    int size = 0;
    VertexSet witness;  ///< ascending
};

/// Maximum clique. Among maximum cliques the witness is the lexicographically
/// smallest ascending id sequence.
CliqueResult max_clique(const Graph& g, const SolverLimits& limits = {});
int max_clique_size(const Graph& g, const SolverLimits& limits = {});

/// Lexicographically smallest clique on exactly `size` vertices, if any.
std::optional<VertexSet> find_clique(const Graph& g, int size, const SolverLimits& limits = {});

/// colour[v] in 0..q-1.
using Colouring = std::vector<int>;

/// Decision form with a witness. The witness is the lexicographically smallest
/// proper colouring vector using colours 0..q-1.
std::optional<Colouring> is_q_colorable(const Graph& g, int q, const SolverLimits& limits = {});

/// Decision only, no canonical witness.
bool has_q_colouring(const Graph& g, int q, const SolverLimits& limits = {});

struct ChromaticResult {
    int chromatic_number = 0;
    Colouring witness;
};
ChromaticResult chromatic_number(const Graph& g, const SolverLimits& limits = {});

/// Result of a (possibly budgeted) feedback vertex set search. `value` is empty
/// exactly when a budget was given and the optimum exceeds it.
struct FvsOutcome {
    std::optional<std::int64_t> value;
    VertexSet witness;  ///< ascending; empty when the budget is exceeded

    bool exceeds() const noexcept { return !value.has_value(); }
};

/// Exact minimum feedback vertex set by shortest-cycle branching with
/// degree-0/1 removal, degree-2 bypass and a disjoint-cycle lower bound.
FvsOutcome min_fvs_size(const Graph& g, std::optional<std::int64_t> budget = std::nullopt,
                        const SolverLimits& limits = {});

FvsOutcome min_weight_fvs(const Graph& g, const WeightFn& weights,
                          std::optional<std::int64_t> budget = std::nullopt, const SolverLimits& limits = {});

/// Value-only variant of the budgeted decision; skips witness canonicalisation.
bool has_fvs_within(const Graph& g, const WeightFn& weights, std::int64_t budget, const SolverLimits& limits = {});

CliqueResult max_independent_set(const Graph& g, const SolverLimits& limits = {});
int max_independent_set_size(const Graph& g, const SolverLimits& limits = {});

struct VertexCoverResult {
    int size = 0;
    VertexSet witness;
};
VertexCoverResult min_vertex_cover(const Graph& g, const SolverLimits& limits = {});
int min_vertex_cover_size(const Graph& g, const SolverLimits& limits = {});

/// Exhaustive search in counting order (variable 1 is the lowest bit).
/// Returns a satisfying assignment indexed 1..variable_count (slot 0 unused).
std::optional<std::vector<bool>> cnf_satisfiable(const CnfFormula& f, const SolverLimits& limits = {});

}  // namespace crosscomp
