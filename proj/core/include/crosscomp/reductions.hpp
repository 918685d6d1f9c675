#pragma once

#include "crosscomp/cnf.hpp"
#include "crosscomp/instances.hpp"

namespace crosscomp {

/// 3-colouring to 3-colouring with a triangle split decomposition. Edge e_i =
/// {u_i, v_i} (u_i < v_i, edges in lexicographic order) gets a fresh triangle
/// (a_i, b_i, c_i) with u_i-a_i, v_i-b_i and v_i-c_i. The original vertices keep
/// their ids and form X; the triangles follow in edge order and form Y.
TsdInstance reduce_3col_to_tsd(const Graph& g);

/// FVS to FVS on bipartite graphs of girth >= 6 by subdividing every edge
/// three times. X is the side containing the smallest vertex of each component.
Bg6Instance reduce_fvs_to_bg6(const Graph& g, std::int64_t ell);

/// Answer-preserving conversions between CLIQUE, INDEPENDENT SET and VERTEX COVER:
///   clique(G, l) <-> is(complement G, l),   is(G, l) <-> vc(G, |V| - l).
/// Any deletion-set annotation is carried through unchanged.
BudgetedInstance complement_transform(const BudgetedInstance& inst, Problem target);

/// Clause-gadget reduction: one vertex per (clause, literal) occurrence, edges
/// between occurrences in different clauses that do not contradict, and a
/// clique of size ell = clause count asked for. A formula with an empty clause
/// maps to the single-vertex instance with ell = 2.
BudgetedInstance reduce_sat_to_clique(const CnfFormula& f);

}  // namespace crosscomp
