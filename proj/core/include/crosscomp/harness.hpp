#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "crosscomp/compositions.hpp"
#include "crosscomp/pipeline.hpp"

namespace crosscomp {

/// Closed forms recomputed from a batch signature, independently of the
/// construction code.
struct ClosedForm {
    bool canonical_no = false;
    int t = 0;  ///< padded
    int log_t = 0;
    std::int64_t k_prime = 0;
    std::int64_t ell_prime = 0;
    std::int64_t bound = 0;  ///< polynomial bound on k' in s and log t
};

/// `s` is the largest input vertex count.
ClosedForm closed_form(Construction c, int t_input, const EquivalenceKey& key, std::int64_t s);

struct AuditInputs {
    Construction construction = Construction::CliqueVc;
    int t = 0;  ///< batch size before padding
    EquivalenceKey key;
    std::int64_t max_input_size = 0;
};

struct ParamAudit {
    std::int64_t expected_k = 0;
    std::int64_t actual_k = 0;
    std::int64_t expected_ell = 0;
    std::int64_t actual_ell = 0;
    std::int64_t bound = 0;
    bool formula_match = false;
    bool within_bound = false;

    bool ok() const { return formula_match && within_bound; }
    friend bool operator==(const ParamAudit&, const ParamAudit&) = default;
};

/// Compares a composition's k' and l' with the closed forms and k' with the
/// polynomial bound.
ParamAudit audit_parameter_bound(const AuditInputs& inputs, const CompositionOutput& actual);

/// Signature, padded size and audit inputs of a batch, for audits without oracles.
AuditInputs audit_inputs(Construction c, std::span<const AnyInstance> batch);

struct VerificationReport {
    Construction construction = Construction::CliqueVc;
    std::string signature;
    std::vector<std::string> instance_ids;
    std::optional<std::uint64_t> seed;
    std::vector<bool> input_verdicts;
    bool composed_verdict = false;
    bool or_match = false;
    ParamAudit audit;
    int composed_vertices = 0;
    std::vector<double> input_ms;
    double composed_ms = 0.0;
};

/// Composes the batch, decides every input and the composed instance with the
/// exact oracles and audits the parameter. Inputs failing their structural
/// check count as NO. Oracle size guards propagate as SizeGuardError.
VerificationReport verify_or_equivalence(Construction c, std::span<const AnyInstance> batch,
                                         const SolverLimits& limits = {});

/// Human-readable multi-line summary.
std::string format_report(const VerificationReport& r);

/// One tab-separated record; `tsv_header` names the columns.
std::string tsv_header();
std::string tsv_record(const VerificationReport& r);

struct GadgetCheck {
    std::string name;
    bool passed = false;
    std::optional<std::string> counterexample;  ///< serialized graph, set on failure
    std::string detail;
};

struct GadgetSuiteResult {
    std::vector<GadgetCheck> checks;
    bool all_passed() const;
};

/// Odd wheels, the K4-in-a-box, the merge property on all graphs up to 6
/// vertices, the triangle-split reduction on all graphs up to 4 vertices, FVS
/// preservation under 3-subdivision on all graphs up to 6 vertices, and the
/// colouring and clique structure claims on small composed instances.
/// Deterministic.
GadgetSuiteResult run_gadget_suite();

/// Seeded batch generators covering the desk-scale grids.
std::vector<AnyInstance> random_clique_batch(std::mt19937_64& rng);
std::vector<AnyInstance> random_tsd_batch(std::mt19937_64& rng);
std::vector<AnyInstance> random_bg6_batch(std::mt19937_64& rng);
std::vector<AnyInstance> random_is_batch(std::mt19937_64& rng);
std::vector<AnyInstance> random_bipartite_batch(std::mt19937_64& rng);
std::vector<CnfFormula> random_cnf_batch(std::mt19937_64& rng);

enum class Grid { Default, Small };

struct SuiteSection {
    std::string name;
    std::size_t batches = 0;
    std::size_t or_matches = 0;
    std::size_t audits_ok = 0;
    std::size_t yes_batches = 0;  ///< batches whose expected answer is YES
    double seconds = 0.0;
    bool passed = false;
    std::string failure;  ///< first failing batch, serialized
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::vector<SuiteSection> sections;
    std::vector<std::string> records;  ///< tsv records
    bool all_passed() const;
};

/// Verifies `batches` seeded random batches of one construction. Stops at the
/// first OR mismatch or failed audit and keeps that batch in `failure`. Every
/// verified batch appends a tsv record to `sink`.
SuiteSection run_or_section(Construction c, std::uint64_t seed, std::size_t batches, SuiteResult& sink);
/// Runs each seeded CNF batch through the pipeline with both kernel stages.
SuiteSection run_pipeline_section(std::uint64_t seed, std::size_t batches);

/// Gadget suite, the five OR-equivalence grids and the pipeline grid.
/// `progress`, if set, is called with each finished section.
SuiteResult run_suite(std::uint64_t seed, Grid grid,
                      const std::function<void(const SuiteSection&)>& progress = {});

}  // namespace crosscomp
