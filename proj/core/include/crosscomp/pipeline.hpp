#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosscomp/cnf.hpp"
#include "crosscomp/compositions.hpp"

namespace crosscomp {

/// Ordered records of unparameterized instances. The tuple is a YES instance
/// when at least one record decodes to a YES instance.
struct OrTuple {
    std::vector<std::string> records;

    friend bool operator==(const OrTuple&, const OrTuple&) = default;
};

/// Records framed as "<decimal length>:<bytes>", concatenated.
std::string write_or_tuple(const OrTuple& tuple);
OrTuple parse_or_tuple(std::string_view bytes);

/// Stand-ins for the kernel the lower-bound argument hypothesises. Neither is
/// a polynomial kernel; TrivialOracle runs an exponential-time oracle.
enum class KernelStage { Identity, TrivialOracle };

std::string_view tag(KernelStage k);

enum class SourceReduction { SatToClique };

struct PipelineConfig {
    std::size_t alphabet_size = 256;
    KernelStage kernel_stage = KernelStage::Identity;
    /// clique-vc consumes CLIQUE directly; fvs-dc consumes INDEPENDENT SET
    /// through the complement transform. Other constructions are rejected.
    Construction composition = Construction::CliqueVc;
    SourceReduction source_reduction = SourceReduction::SatToClique;
    /// Composed clique instances outgrow the default clique ceiling quickly.
    SolverLimits limits{160, 40, 64, 24};
};

struct ClassTrace {
    std::string key;
    std::size_t members = 0;
    std::int64_t composed_k = 0;
    std::size_t composed_bytes = 0;
    std::int64_t kernel_k = 0;
    std::size_t kernel_bytes = 0;
};

struct PipelineTrace {
    std::string kernel_label;
    std::size_t input_count = 0;
    std::size_t deduped_count = 0;
    std::size_t max_input_length = 0;  ///< longest canonical formula, bytes
    bool dedupe_bound_holds = false;   ///< deduped <= min(t, (|alphabet|+1)^max_input_length)
    std::size_t class_count = 0;
    std::size_t max_reduced_size = 0;  ///< instance_size of the largest reduced instance
    bool class_bound_holds = false;    ///< r <= s^2 + 1 (clique) or s^3 + 1 (independent set)
    std::vector<ClassTrace> classes;
    std::size_t tuple_bytes = 0;
};

/// body '#' '1'^k, where body is the canonical graph file of the instance.
std::string encode_unparameterized(const ParamInstance& inst);

/// Inverse of encode_unparameterized. Throws DecodeError when the tail is not
/// '#' followed only by '1's, when the body does not parse as a parameterized
/// instance, or when the number of '1's differs from the deletion set size.
ParamInstance decode_unparameterized(std::string_view bytes);

/// Identity returns the instance unchanged. TrivialOracle decides it and
/// returns the constant-size YES or NO instance of the same problem.
ParamInstance toy_kernelize(const ParamInstance& inst, KernelStage stage, const SolverLimits& limits = {});

/// SAT batch -> dedupe -> reduce -> partition -> compose -> kernel -> encode.
std::pair<OrTuple, PipelineTrace> run_distillation(std::span<const CnfFormula> formulas,
                                                   const PipelineConfig& config = {});

/// True iff some record decodes to a YES instance.
bool or_verdict(const OrTuple& tuple, const SolverLimits& limits = PipelineConfig{}.limits);

}  // namespace crosscomp
