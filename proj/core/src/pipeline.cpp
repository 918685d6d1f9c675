#include "crosscomp/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "crosscomp/errors.hpp"
#include "crosscomp/io.hpp"
#include "crosscomp/reductions.hpp"

namespace crosscomp {

namespace {

// Re-throws a stage failure with the stage name in front, keeping its type.
template <typename F>
auto at_stage(const char* stage, F&& body) {
    const std::string prefix = std::string("pipeline stage '") + stage + "': ";
    try {
        return body();
    } catch (const SizeGuardError& e) {
        throw SizeGuardError(prefix + e.what());
    } catch (const InvariantFailure& e) {
        throw InvariantFailure(prefix + e.what());
    } catch (const DecodeError& e) {
        throw DecodeError(prefix + e.what());
    } catch (const PreconditionError& e) {
        throw PreconditionError(prefix + e.what());
    } catch (const Error& e) {
        throw Error(prefix + e.what());
    }
}

// count <= base^exponent, without overflow.
bool fits_power(std::size_t count, std::size_t base, std::size_t exponent) {
    if (count <= 1)
        return true;
    if (base <= 1)
        return false;
    return std::log(static_cast<double>(count)) <= static_cast<double>(exponent) * std::log(static_cast<double>(base)) + 1e-9;
}

}  // namespace

std::string_view tag(KernelStage k) {
    switch (k) {
    case KernelStage::Identity: return "identity";
    case KernelStage::TrivialOracle: return "trivial";
    }
    return "";
}

std::string write_or_tuple(const OrTuple& tuple) {
    std::string out;
    for (const auto& record : tuple.records) {
        out += std::to_string(record.size());
        out += ':';
        out += record;
    }
    return out;
}

OrTuple parse_or_tuple(std::string_view bytes) {
    OrTuple tuple;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const std::size_t colon = bytes.find(':', pos);
        if (colon == std::string_view::npos || colon == pos)
            throw DecodeError("record at byte " + std::to_string(pos) + " has no length prefix");
        std::size_t length = 0;
        auto [ptr, ec] = std::from_chars(bytes.data() + pos, bytes.data() + colon, length);
        if (ec != std::errc{} || ptr != bytes.data() + colon)
            throw DecodeError("record at byte " + std::to_string(pos) + " has a malformed length");
        if (length > bytes.size() - colon - 1)
            throw DecodeError("record at byte " + std::to_string(pos) + " runs past the end of the tuple");
        tuple.records.emplace_back(bytes.substr(colon + 1, length));
        pos = colon + 1 + length;
    }
    return tuple;
}

std::string encode_unparameterized(const ParamInstance& inst) {
    if (auto err = check_param(inst))
        throw PreconditionError("cannot encode a malformed instance: " + *err);
    std::string body = write_graph_file(inst);
    // Canonical graph files carry no comments, so no '#' can appear.
    if (body.find('#') != std::string::npos)
        throw InvariantFailure("canonical serialization contains '#'");
    body += '#';
    body.append(static_cast<std::size_t>(inst.param_k), '1');
    return body;
}

ParamInstance decode_unparameterized(std::string_view bytes) {
    const std::size_t hash = bytes.rfind('#');
    if (hash == std::string_view::npos)
        throw DecodeError("no '#' separator");
    const std::string_view tail = bytes.substr(hash + 1);
    if (tail.find_first_not_of('1') != std::string_view::npos)
        throw DecodeError("tail after '#' contains a byte other than '1'");
    AnyInstance inst;
    try {
        inst = parse_graph_file(bytes.substr(0, hash));
    } catch (const ParseError& e) {
        throw DecodeError(std::string("body does not parse: ") + e.what());
    }
    auto* p = std::get_if<ParamInstance>(&inst);
    if (!p)
        throw DecodeError("body is not a parameterized instance");
    if (static_cast<std::int64_t>(tail.size()) != p->param_k)
        throw DecodeError("tail encodes k = " + std::to_string(tail.size()) + " but the deletion set has " +
                          std::to_string(p->param_k) + " vertices");
    return std::move(*p);
}

ParamInstance toy_kernelize(const ParamInstance& inst, KernelStage stage, const SolverLimits& limits) {
    if (stage == KernelStage::Identity)
        return inst;
    return decide(inst, limits) ? canonical_yes_instance(inst.problem) : canonical_no_instance(inst.problem);
}

std::pair<OrTuple, PipelineTrace> run_distillation(std::span<const CnfFormula> formulas, const PipelineConfig& config) {
    if (formulas.empty())
        throw PreconditionError("pipeline needs at least one formula");
    if (config.alphabet_size == 0)
        throw PreconditionError("alphabet size must be positive");
    Problem source;
    switch (config.composition) {
    case Construction::CliqueVc: source = Problem::Clique; break;
    case Construction::FvsDc: source = Problem::IndependentSet; break;
    default:
        throw PreconditionError("construction " + std::string(tag(config.composition)) +
                                " does not consume the CLIQUE output of the source reduction");
    }

    PipelineTrace trace;
    trace.kernel_label = config.kernel_stage == KernelStage::Identity
                             ? "identity"
                             : "trivial-oracle (exponential-time stand-in, not a polynomial kernel)";
    trace.input_count = formulas.size();

    // (1) dedupe on canonical bytes, first occurrence wins
    std::vector<CnfFormula> unique = at_stage("dedupe", [&] {
        std::set<std::string> seen;
        std::vector<CnfFormula> out;
        for (const auto& f : formulas) {
            check_formula(f);
            std::string bytes = write_cnf(f);
            trace.max_input_length = std::max(trace.max_input_length, bytes.size());
            if (seen.insert(std::move(bytes)).second)
                out.push_back(f);
        }
        return out;
    });
    trace.deduped_count = unique.size();
    trace.dedupe_bound_holds = trace.deduped_count <= trace.input_count &&
                               fits_power(trace.deduped_count, config.alphabet_size + 1, trace.max_input_length);

    // (2) Karp reduction
    std::vector<AnyInstance> reduced = at_stage("reduce", [&] {
        std::vector<AnyInstance> out;
        for (const auto& f : unique) {
            BudgetedInstance b = reduce_sat_to_clique(f);
            if (source == Problem::IndependentSet)
                b = complement_transform(b, Problem::IndependentSet);
            trace.max_reduced_size = std::max(trace.max_reduced_size, instance_size(b));
            out.emplace_back(std::move(b));
        }
        return out;
    });

    // (3) partition
    auto classes = at_stage("partition", [&] { return partition_instances(source, reduced); });
    trace.class_count = classes.size();
    const std::size_t s = std::max<std::size_t>(trace.max_reduced_size, 1);
    const std::size_t class_bound = source == Problem::Clique ? s * s + 1 : s * s * s + 1;
    trace.class_bound_holds = trace.class_count <= trace.deduped_count && trace.class_count <= class_bound;

    // (4)-(7) compose, kernelize, encode, assemble
    OrTuple tuple;
    for (const auto& [key, members] : classes) {
        ClassTrace ct;
        ct.key = to_string(key);
        ct.members = members.size();
        CompositionOutput composed = at_stage("compose", [&] { return compose(config.composition, members); });
        ct.composed_k = composed.instance.param_k;
        ct.composed_bytes = write_graph_file(composed.instance).size();
        ParamInstance kernel =
            at_stage("kernelize", [&] { return toy_kernelize(composed.instance, config.kernel_stage, config.limits); });
        ct.kernel_k = kernel.param_k;
        std::string record = at_stage("encode", [&] { return encode_unparameterized(kernel); });
        ct.kernel_bytes = record.size();
        tuple.records.push_back(std::move(record));
        trace.classes.push_back(std::move(ct));
    }
    trace.tuple_bytes = write_or_tuple(tuple).size();
    return {std::move(tuple), std::move(trace)};
}

bool or_verdict(const OrTuple& tuple, const SolverLimits& limits) {
    for (const auto& record : tuple.records)
        if (decide(decode_unparameterized(record), limits))
            return true;
    return false;
}

}  // namespace crosscomp
