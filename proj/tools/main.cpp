#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "crosscomp/compositions.hpp"
#include "crosscomp/errors.hpp"
#include "crosscomp/harness.hpp"
#include "crosscomp/io.hpp"
#include "crosscomp/pipeline.hpp"
#include "crosscomp/reductions.hpp"

namespace fs = std::filesystem;
using namespace crosscomp;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

std::string ids(const VertexSet& s) {
    std::string out;
    for (Vertex v : s.sorted())
        out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

std::optional<std::int64_t> budget_of(const AnyInstance& inst) {
    return std::visit(
        [](const auto& i) -> std::optional<std::int64_t> {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, TsdInstance>)
                return std::nullopt;
            else
                return i.ell;
        },
        inst);
}

int print_answer(bool yes) {
    std::cout << "answer " << (yes ? "YES" : "NO") << '\n';
    return yes ? kOk : kNo;
}

int cmd_solve(const std::string& problem_text, std::optional<std::int64_t> ell, const fs::path& file) {
    const AnyInstance inst = parse_graph_file(read_file(file));
    Problem problem = problem_of(inst);
    if (!problem_text.empty()) {
        auto p = problem_from_tag(problem_text);
        if (!p)
            throw PreconditionError("unknown problem tag '" + problem_text + "'");
        problem = *p;
    }
    if (!ell)
        ell = budget_of(inst);
    const Graph& g = graph_of(inst);
    std::cout << "problem " << tag(problem) << '\n';
    switch (problem) {
    case Problem::Clique:
    case Problem::CliqueVc: {
        auto r = max_clique(g);
        std::cout << "value " << r.size << "\nwitness " << ids(r.witness) << '\n';
        return ell ? print_answer(r.size >= *ell) : kOk;
    }
    case Problem::IndependentSet: {
        auto r = max_independent_set(g);
        std::cout << "value " << r.size << "\nwitness " << ids(r.witness) << '\n';
        return ell ? print_answer(r.size >= *ell) : kOk;
    }
    case Problem::VertexCover: {
        auto r = min_vertex_cover(g);
        std::cout << "value " << r.size << "\nwitness " << ids(r.witness) << '\n';
        return ell ? print_answer(r.size <= *ell) : kOk;
    }
    case Problem::Fvs:
    case Problem::FvsBg6:
    case Problem::FvsBipartite:
    case Problem::FvsDc:
    case Problem::FvsDcc:
    case Problem::WfvsVc: {
        WeightFn w(static_cast<std::size_t>(g.vertex_count()), 1);
        if (const auto* p = std::get_if<ParamInstance>(&inst); p && p->weights)
            w = *p->weights;
        auto r = min_weight_fvs(g, w, ell);
        if (r.exceeds()) {
            std::cout << "value exceeds " << *ell << '\n';
            return print_answer(false);
        }
        std::cout << "value " << *r.value << "\nwitness " << ids(r.witness) << '\n';
        return ell ? print_answer(*r.value <= *ell) : kOk;
    }
    case Problem::ThreeColoring:
    case Problem::ThreeColTsd: {
        auto c = is_q_colorable(g, 3);
        if (c) {
            std::cout << "witness";
            for (int colour : *c)
                std::cout << ' ' << colour + 1;
            std::cout << '\n';
        }
        return print_answer(c.has_value());
    }
    case Problem::ChromVc: {
        auto r = chromatic_number(g);
        std::cout << "value " << r.chromatic_number << "\nwitness";
        for (int colour : r.witness)
            std::cout << ' ' << colour + 1;
        std::cout << '\n';
        return ell ? print_answer(r.chromatic_number <= *ell) : kOk;
    }
    case Problem::Bare: break;
    }
    throw PreconditionError("a bare graph has no question; pass --problem");
}

int cmd_reduce(const std::string& name, std::optional<std::int64_t> ell, const fs::path& in, const fs::path& out) {
    const std::string text = read_file(in);
    AnyInstance result;
    if (name == "sat-to-clique") {
        result = reduce_sat_to_clique(parse_cnf(text));
    } else {
        const AnyInstance inst = parse_graph_file(text);
        if (name == "3col-to-tsd") {
            result = reduce_3col_to_tsd(graph_of(inst));
        } else if (name == "fvs-to-bg6") {
            auto budget = ell ? ell : budget_of(inst);
            result = reduce_fvs_to_bg6(graph_of(inst), budget.value_or(0));
        } else if (name.rfind("complement:", 0) == 0) {
            const auto sep = name.find(':', 11);
            if (sep == std::string::npos)
                throw PreconditionError("expected complement:<from>:<to>");
            auto from = problem_from_tag(name.substr(11, sep - 11));
            auto to = problem_from_tag(name.substr(sep + 1));
            if (!from || !to)
                throw PreconditionError("unknown problem tag in '" + name + "'");
            const auto* b = std::get_if<BudgetedInstance>(&inst);
            if (!b || b->problem != *from)
                throw PreconditionError("input is not a '" + std::string(tag(*from)) + "' instance");
            result = complement_transform(*b, *to);
        } else {
            throw PreconditionError("unknown reduction '" + name + "'");
        }
    }
    write_file(out, write_graph_file(result));
    std::cout << "wrote " << out.string() << " (" << graph_of(result).vertex_count() << " vertices, "
              << graph_of(result).edge_count() << " edges)\n";
    return kOk;
}

Construction parse_construction(const std::string& text) {
    auto c = construction_from_tag(text);
    if (!c)
        throw PreconditionError("unknown construction '" + text + "'");
    return *c;
}

int cmd_compose(const std::string& construction, const fs::path& manifest, const fs::path& out) {
    const Construction c = parse_construction(construction);
    const Manifest m = load_manifest(manifest);
    const auto result = compose(c, m.instances);
    write_file(out, write_graph_file(result.instance));
    const fs::path report = out.string() + ".report";
    write_file(report, write_report(c, result));
    std::cout << "wrote " << out.string() << " (" << result.instance.graph.vertex_count() << " vertices, k' "
              << result.instance.param_k << ", l' " << result.instance.ell << ")\n"
              << "wrote " << report.string() << '\n';
    return kOk;
}

int cmd_verify(const std::string& construction, const fs::path& manifest) {
    const Construction c = parse_construction(construction);
    const Manifest m = load_manifest(manifest);
    const auto report = verify_or_equivalence(c, m.instances);
    std::cout << format_report(report);
    return report.or_match && report.audit.ok() ? kOk : kNo;
}

int cmd_audit(const std::string& construction, const fs::path& manifest) {
    const Construction c = parse_construction(construction);
    const Manifest m = load_manifest(manifest);
    const auto inputs = audit_inputs(c, m.instances);
    const auto out = compose(c, m.instances);
    const auto a = audit_parameter_bound(inputs, out);
    std::cout << "construction " << tag(c) << '\n'
              << "signature " << to_string(inputs.key) << " t=" << inputs.t << '\n'
              << "k' " << a.actual_k << " closed_form " << a.expected_k << " bound " << a.bound << '\n'
              << "l' " << a.actual_ell << " closed_form " << a.expected_ell << '\n'
              << "formula_match " << (a.formula_match ? "true" : "false") << '\n'
              << "within_bound " << (a.within_bound ? "true" : "false") << '\n';
    return a.ok() ? kOk : kNo;
}

int cmd_gadget(const std::string& which, const fs::path& out) {
    Graph g;
    if (which == "bk4") {
        g = build_bk4().graph;
    } else if (which.rfind("oddwheel:", 0) == 0) {
        g = odd_wheel(std::stoi(which.substr(9)));
    } else {
        throw PreconditionError("unknown gadget '" + which + "'");
    }
    write_file(out, write_graph_file(BudgetedInstance{Problem::Bare, g, {}, {}}));
    std::cout << "wrote " << out.string() << " (" << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges)\n";
    return kOk;
}

int cmd_suite(std::uint64_t seed, const std::string& grid, const std::string& records) {
    Grid g;
    if (grid == "default")
        g = Grid::Default;
    else if (grid == "small")
        g = Grid::Small;
    else
        throw PreconditionError("unknown grid '" + grid + "'");
    std::cout << "seed " << seed << " grid " << grid << '\n';
    const auto result = run_suite(seed, g, [](const SuiteSection& s) {
        std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.or_matches << "/" << s.batches
                  << " matched, " << s.audits_ok << " audits ok, " << s.yes_batches << " yes, " << s.seconds
                  << " s\n";
        if (!s.failure.empty())
            std::cout << s.failure << '\n';
        std::cout.flush();
    });
    if (!records.empty()) {
        std::string text = tsv_header() + "\n";
        for (const auto& r : result.records)
            text += r + "\n";
        write_file(records, text);
    }
    return result.all_passed() ? kOk : kNo;
}

int cmd_pipeline(const std::string& kernel, const std::string& construction, std::size_t alphabet,
                 const fs::path& out, const std::vector<fs::path>& inputs, bool check) {
    PipelineConfig config;
    if (kernel == "identity")
        config.kernel_stage = KernelStage::Identity;
    else if (kernel == "trivial")
        config.kernel_stage = KernelStage::TrivialOracle;
    else
        throw PreconditionError("unknown kernel stage '" + kernel + "'");
    config.composition = parse_construction(construction);
    config.alphabet_size = alphabet;
    std::vector<CnfFormula> formulas;
    for (const auto& p : inputs)
        formulas.push_back(parse_cnf(read_file(p)));
    auto [tuple, trace] = run_distillation(formulas, config);
    write_file(out, write_or_tuple(tuple));
    std::cout << "kernel " << trace.kernel_label << '\n'
              << "inputs " << trace.input_count << '\n'
              << "deduped " << trace.deduped_count << " (bound holds: " << (trace.dedupe_bound_holds ? "yes" : "no")
              << ")\n"
              << "classes " << trace.class_count << " (bound holds: " << (trace.class_bound_holds ? "yes" : "no")
              << ")\n";
    for (const auto& c : trace.classes)
        std::cout << "class " << c.key << " members " << c.members << " k " << c.composed_k << " composed_bytes "
                  << c.composed_bytes << " kernel_k " << c.kernel_k << " record_bytes " << c.kernel_bytes << '\n';
    std::cout << "tuple_bytes " << trace.tuple_bytes << '\n';
    if (!check)
        return kOk;
    bool expected = false;
    for (const auto& f : formulas)
        expected = expected || cnf_satisfiable(f).has_value();
    const bool got = or_verdict(tuple, config.limits);
    std::cout << "or_verdict " << (got ? "YES" : "NO") << " inputs_or " << (expected ? "YES" : "NO") << '\n';
    return got == expected ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-composition construction kit and verifier"};
    app.require_subcommand(1);

    std::string problem, name, construction, which, grid = "default", kernel = "identity", records;
    std::string pipeline_construction = "clique-vc";
    std::optional<std::int64_t> ell;
    fs::path in, out, manifest;
    std::vector<fs::path> cnfs;
    std::uint64_t seed = 1;
    std::size_t alphabet = 256;
    bool check = false;

    auto* solve = app.add_subcommand("solve", "Run the exact oracle for a problem");
    solve->add_option("--problem", problem, "Problem tag (defaults to the file's prob stanza)");
    solve->add_option("--ell", ell, "Budget or target size");
    solve->add_option("file", in, "Instance file")->required()->check(CLI::ExistingFile);

    auto* reduce = app.add_subcommand("reduce", "Apply a single-instance reduction");
    reduce->add_option("--name", name, "3col-to-tsd | fvs-to-bg6 | complement:<from>:<to> | sat-to-clique")
        ->required();
    reduce->add_option("--ell", ell, "Budget for fvs-to-bg6 when the input has none");
    reduce->add_option("input", in, "Input file")->required()->check(CLI::ExistingFile);
    reduce->add_option("output", out, "Output file")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Compose a manifest batch");
    compose_cmd->add_option("--construction", construction, "clique-vc | chrom-vc | fvs-dcc | fvs-dc | wfvs-vc")
        ->required();
    compose_cmd->add_option("manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);
    compose_cmd->add_option("-o,--output", out, "Composed instance file")->required();

    auto* verify = app.add_subcommand("verify-or", "Check OR-equivalence of a composition with the oracles");
    verify->add_option("--construction", construction, "Construction tag")->required();
    verify->add_option("manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);

    auto* audit = app.add_subcommand("audit", "Check k' and l' against the closed forms, no oracles");
    audit->add_option("--construction", construction, "Construction tag")->required();
    audit->add_option("manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);

    auto* gadget = app.add_subcommand("gadget", "Write a gadget graph");
    gadget->add_option("which", which, "bk4 | oddwheel:<k>")->required();
    gadget->add_option("-o,--output", out, "Output file")->required();

    auto* suite = app.add_subcommand("suite", "Run the gadget and OR-equivalence suite");
    suite->add_option("--seed", seed, "Random seed");
    suite->add_option("--grid", grid, "default | small");
    suite->add_option("--records", records, "Write tab-separated batch records here");

    auto* pipeline = app.add_subcommand("pipeline", "Run the distillation pipeline on CNF files");
    pipeline->add_option("--kernel", kernel, "identity | trivial");
    pipeline->add_option("--composition", pipeline_construction, "clique-vc | fvs-dc");
    pipeline->add_option("--alphabet", alphabet, "Alphabet size for the dedupe bound");
    pipeline->add_flag("--check", check, "Decide the tuple and compare with the inputs");
    pipeline->add_option("-o,--output", out, "OR-tuple file")->required();
    pipeline->add_option("cnf", cnfs, "CNF files")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve)
            return cmd_solve(problem, ell, in);
        if (*reduce)
            return cmd_reduce(name, ell, in, out);
        if (*compose_cmd)
            return cmd_compose(construction, manifest, out);
        if (*verify)
            return cmd_verify(construction, manifest);
        if (*audit)
            return cmd_audit(construction, manifest);
        if (*gadget)
            return cmd_gadget(which, out);
        if (*suite)
            return cmd_suite(seed, grid, records);
        if (*pipeline)
            return cmd_pipeline(kernel, pipeline_construction, alphabet, out, cnfs, check);
    } catch (const InvariantFailure& e) {
        std::cerr << "internal invariant failure: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
