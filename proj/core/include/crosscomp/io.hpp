#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "crosscomp/cnf.hpp"
#include "crosscomp/compositions.hpp"
#include "crosscomp/instances.hpp"

namespace crosscomp {

/// Parses a DIMACS-style graph file:
///
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>            (1-based, m lines)
///   l <ell>
///   z <v...>             deletion set / vertex cover
///   px <v...>            bipartition side or TSD independent part
///   py <v...>            other side; for 3col-tsd grouped by triangle
///   w <v> <weight>       one per vertex, or none at all
///   prob <tag>
///
/// The header must be the first non-comment line; the remaining lines may come
/// in any order. The prob tag picks the instance type; without one the file is
/// a bare graph. Structural invariants of the decoded type are checked.
AnyInstance parse_graph_file(std::string_view text);

/// Canonical form: no comments, edges sorted, stanzas in the order
/// l, z, px, py, w, prob, one '\n' per line. z is written ascending; px and py
/// keep their order.
std::string write_graph_file(const AnyInstance& inst);

/// "p cnf <vars> <clauses>" followed by 0-terminated clauses, which may span
/// lines. Comment lines start with 'c'.
CnfFormula parse_cnf(std::string_view text);

/// Canonical form of canonical_formula(f), one clause per line.
std::string write_cnf(const CnfFormula& f);

struct Manifest {
    Problem problem = Problem::Bare;
    std::vector<std::filesystem::path> paths;
    std::vector<AnyInstance> instances;
};

/// "problem <tag>" then one "instance <path>" per member; paths are relative to
/// `base`. Member failures are reported together, each with its file name.
Manifest parse_manifest(std::string_view text, const std::filesystem::path& base);
Manifest load_manifest(const std::filesystem::path& path);

/// "<key> <value>" lines for a composition: the formula report and the actual
/// k' and l', then one "range <label> <first> <last>" line per gadget block
/// (1-based ids).
std::string write_report(Construction c, const CompositionOutput& out);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace crosscomp
