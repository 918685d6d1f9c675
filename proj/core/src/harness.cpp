#include "crosscomp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "crosscomp/errors.hpp"
#include "crosscomp/io.hpp"
#include "crosscomp/reductions.hpp"

namespace crosscomp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

int padded(int t) {
    int p = 2;
    while (p < t)
        p *= 2;
    return p;
}

int log2_exact(int t) {
    int log = 0;
    while ((1 << log) < t)
        ++log;
    return log;
}

std::string serialize_graph(const Graph& g) { return write_graph_file(BudgetedInstance{Problem::Bare, g, {}, {}}); }

std::string serialize_batch(std::span<const AnyInstance> batch) {
    std::string out;
    for (std::size_t i = 0; i < batch.size(); ++i)
        out += "c member " + std::to_string(i + 1) + "\n" + write_graph_file(batch[i]);
    return out;
}

// Calls fn on every labelled graph with n vertices.
template <typename F>
void for_each_graph(int n, F&& fn) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        if (!fn(g))
            return;
    }
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool input_verdict(Problem source, const AnyInstance& inst, const SolverLimits& limits) {
    if (equivalence_key(source, inst).malformed)
        return false;
    return decide(inst, limits);
}

}  // namespace

ClosedForm closed_form(Construction c, int t_input, const EquivalenceKey& key, std::int64_t s) {
    ClosedForm f;
    if (key.malformed) {
        const auto no = canonical_no_instance(target_problem(c));
        f.canonical_no = true;
        f.t = t_input;
        f.k_prime = no.param_k;
        f.ell_prime = no.ell;
        f.bound = no.param_k;
        return f;
    }
    const auto& sig = key.signature;
    switch (c) {
    case Construction::CliqueVc: {
        const std::int64_t n = sig[0], ell = sig[1];
        f.t = t_input;
        f.k_prime = ell * n + 3 * choose2(n);
        f.ell_prime = ell + 1 + choose2(n);
        f.bound = 4 * s * s;
        break;
    }
    case Construction::ChromVc: {
        const std::int64_t m = sig[1];
        f.t = padded(t_input);
        f.log_t = log2_exact(f.t);
        f.k_prime = 3 * f.log_t + 4 + 3 * m;
        f.ell_prime = f.log_t + 4;
        f.bound = 3 * f.log_t + 4 + 3 * s;
        break;
    }
    case Construction::FvsDcc: {
        const std::int64_t x = sig[0], y = sig[1], ell = sig[2];
        f.t = t_input;
        f.k_prime = y;
        f.ell_prime = (t_input - 1) * x + ell;
        f.bound = s;
        break;
    }
    case Construction::FvsDc: {
        const std::int64_t n = sig[0], m = sig[1], ell = sig[2];
        f.t = padded(t_input);
        f.log_t = log2_exact(f.t);
        f.k_prime = n + 8 * n * f.log_t;
        f.ell_prime = 2 * n * f.log_t + (n + 2) * f.t * m * f.log_t + (n - ell);
        f.bound = s + 8 * s * f.log_t;
        break;
    }
    case Construction::WfvsVc: {
        const std::int64_t x = sig[0], y = sig[1], ell = sig[2];
        f.t = padded(t_input);
        f.log_t = log2_exact(f.t);
        f.k_prime = y + 8 * f.log_t;
        f.ell_prime = f.log_t * (2 * f.t * x) + (f.t - 1) * x + ell;
        f.bound = s + 8 * f.log_t;
        break;
    }
    }
    return f;
}

AuditInputs audit_inputs(Construction c, std::span<const AnyInstance> batch) {
    if (batch.empty())
        throw PreconditionError("audit needs a nonempty batch");
    AuditInputs in;
    in.construction = c;
    in.t = static_cast<int>(batch.size());
    const Problem source = source_problem(c);
    bool malformed = false;
    std::optional<EquivalenceKey> common;
    for (const auto& inst : batch) {
        in.max_input_size = std::max<std::int64_t>(in.max_input_size, graph_of(inst).vertex_count());
        auto key = equivalence_key(source, inst);
        if (key.malformed) {
            malformed = true;
        } else if (!common) {
            common = key;
        } else if (*common != key && !malformed) {
            throw PreconditionError("batch mixes equivalence classes " + to_string(*common) + " and " +
                                    to_string(key));
        }
    }
    in.key = malformed ? EquivalenceKey{true, {}} : *common;
    return in;
}

ParamAudit audit_parameter_bound(const AuditInputs& inputs, const CompositionOutput& actual) {
    const ClosedForm f = closed_form(inputs.construction, inputs.t, inputs.key, inputs.max_input_size);
    ParamAudit a;
    a.expected_k = f.k_prime;
    a.expected_ell = f.ell_prime;
    a.actual_k = actual.instance.param_k;
    a.actual_ell = actual.instance.ell;
    a.bound = f.bound;
    a.formula_match = a.expected_k == a.actual_k && a.expected_ell == a.actual_ell &&
                      a.actual_k == static_cast<std::int64_t>(actual.instance.deletion_set.size());
    a.within_bound = a.actual_k <= a.bound;
    return a;
}

VerificationReport verify_or_equivalence(Construction c, std::span<const AnyInstance> batch,
                                         const SolverLimits& limits) {
    if (batch.empty())
        throw PreconditionError("verification needs a nonempty batch");
    VerificationReport r;
    r.construction = c;
    const AuditInputs inputs = audit_inputs(c, batch);
    r.signature = to_string(inputs.key) + " t=" + std::to_string(inputs.t);
    for (std::size_t i = 0; i < batch.size(); ++i)
        r.instance_ids.push_back(std::to_string(i + 1));

    const CompositionOutput out = compose(c, batch);
    r.audit = audit_parameter_bound(inputs, out);
    r.composed_vertices = out.instance.graph.vertex_count();

    const Problem source = source_problem(c);
    bool any_yes = false;
    for (const auto& inst : batch) {
        auto start = Clock::now();
        const bool verdict = input_verdict(source, inst, limits);
        r.input_ms.push_back(ms_since(start));
        r.input_verdicts.push_back(verdict);
        any_yes = any_yes || verdict;
    }
    auto start = Clock::now();
    r.composed_verdict = decide(out.instance, limits);
    r.composed_ms = ms_since(start);
    r.or_match = r.composed_verdict == any_yes;
    return r;
}

std::string format_report(const VerificationReport& r) {
    std::ostringstream s;
    s << "construction   " << tag(r.construction) << '\n'
      << "signature      " << r.signature << '\n';
    if (r.seed)
        s << "seed           " << *r.seed << '\n';
    s << "inputs        ";
    for (std::size_t i = 0; i < r.input_verdicts.size(); ++i)
        s << ' ' << r.instance_ids[i] << '=' << (r.input_verdicts[i] ? "YES" : "NO");
    s << '\n'
      << "composed       " << (r.composed_verdict ? "YES" : "NO") << " (" << r.composed_vertices << " vertices)\n"
      << "or_match       " << (r.or_match ? "true" : "false") << '\n'
      << "k'             " << r.audit.actual_k << " (closed form " << r.audit.expected_k << ", bound " << r.audit.bound
      << ")\n"
      << "l'             " << r.audit.actual_ell << " (closed form " << r.audit.expected_ell << ")\n"
      << "audit          " << (r.audit.ok() ? "ok" : "FAILED") << '\n';
    double inputs_ms = 0;
    for (double v : r.input_ms)
        inputs_ms += v;
    s << "elapsed_ms     inputs " << inputs_ms << ", composed " << r.composed_ms << '\n';
    return s.str();
}

std::string tsv_header() {
    return "construction\tseed\tsignature\tinstances\tinput_verdicts\tcomposed_verdict\tor_match\t"
           "expected_k\tactual_k\tbound\twithin_bound\texpected_ell\tactual_ell\tformula_match\t"
           "composed_vertices\tinputs_ms\tcomposed_ms";
}

std::string tsv_record(const VerificationReport& r) {
    std::ostringstream s;
    auto join = [](const auto& items, auto fmt) {
        std::string out;
        for (std::size_t i = 0; i < items.size(); ++i)
            out += (i ? "," : "") + fmt(items[i]);
        return out;
    };
    double inputs_ms = 0;
    for (double v : r.input_ms)
        inputs_ms += v;
    s << tag(r.construction) << '\t' << (r.seed ? std::to_string(*r.seed) : "-") << '\t' << r.signature << '\t'
      << join(r.instance_ids, [](const std::string& x) { return x; }) << '\t'
      << join(r.input_verdicts, [](bool b) { return std::string(b ? "1" : "0"); }) << '\t' << r.composed_verdict
      << '\t' << r.or_match << '\t' << r.audit.expected_k << '\t' << r.audit.actual_k << '\t' << r.audit.bound << '\t'
      << r.audit.within_bound << '\t' << r.audit.expected_ell << '\t' << r.audit.actual_ell << '\t'
      << r.audit.formula_match << '\t' << r.composed_vertices << '\t' << inputs_ms << '\t' << r.composed_ms;
    return s.str();
}

bool GadgetSuiteResult::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const GadgetCheck& c) { return c.passed; });
}

namespace {

GadgetCheck check_odd_wheels() {
    GadgetCheck c{"odd wheels W5, W7, W9 need exactly 4 colours", true, std::nullopt, ""};
    for (int rim : {5, 7, 9}) {
        Graph w = odd_wheel(rim);
        if (has_q_colouring(w, 3) || !has_q_colouring(w, 4)) {
            c.passed = false;
            c.counterexample = serialize_graph(w);
            c.detail = "W" + std::to_string(rim);
            return c;
        }
    }
    c.detail = "3 wheels";
    return c;
}

GadgetCheck check_bk4() {
    GadgetCheck c{"K4-in-a-box: minimum FVS 2, optimal sets exactly the terminal pairs", false, std::nullopt, ""};
    const auto gadget = build_bk4();
    const Graph& g = gadget.graph;
    auto fail = [&](std::string why) {
        c.counterexample = serialize_graph(g);
        c.detail = std::move(why);
        return c;
    };
    if (g.vertex_count() != 8 || g.edge_count() != 14)
        return fail("expected 8 vertices and 14 edges");
    for (Vertex v = 4; v < 8; ++v)
        if (g.degree(v) != 2)
            return fail("box vertex " + std::to_string(v + 1) + " does not have degree 2");
    auto fvs = min_fvs_size(g);
    if (!fvs.value || *fvs.value != 2)
        return fail("minimum FVS is not 2");
    std::vector<VertexSet> optimal;
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = u + 1; v < 8; ++v)
            if (is_forest(remove_vertices(g, VertexSet{u, v})))
                optimal.push_back(VertexSet{u, v});
    if (optimal != std::vector<VertexSet>{gadget.terminals0, gadget.terminals1})
        return fail("optimal FVS are not exactly the two terminal pairs");
    c.passed = true;
    c.detail = "2 optimal sets";
    return c;
}

GadgetCheck check_merge_property() {
    GadgetCheck c{"merge property: odd cycle in N({u,v}) forces different colours (n <= 6)", true, std::nullopt, ""};
    std::size_t pairs_checked = 0;
    for (int n = 2; n <= 6 && c.passed; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            // every proper 3-colouring, by exhaustive assignment
            std::vector<std::vector<int>> colourings;
            std::vector<int> colour(n, 0);
            const auto edges = g.edges();
            for (;;) {
                bool proper = true;
                for (auto [u, v] : edges)
                    if (colour[u] == colour[v]) {
                        proper = false;
                        break;
                    }
                if (proper)
                    colourings.push_back(colour);
                int i = 0;
                while (i < n && ++colour[i] == 3)
                    colour[i++] = 0;
                if (i == n)
                    break;
            }
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v))
                        continue;
                    std::vector<Vertex> hood;
                    for (Vertex w = 0; w < n; ++w)
                        if (w != u && w != v && (g.has_edge(u, w) || g.has_edge(v, w)))
                            hood.push_back(w);
                    if (is_bipartite(induced_subgraph(g, VertexSet(hood))))
                        continue;
                    ++pairs_checked;
                    for (const auto& col : colourings)
                        if (col[u] == col[v]) {
                            c.passed = false;
                            c.counterexample = serialize_graph(g);
                            c.detail = "vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1);
                            return false;
                        }
                }
            return true;
        });
    }
    if (c.passed)
        c.detail = std::to_string(pairs_checked) + " constrained pairs";
    return c;
}

GadgetCheck check_tsd_reduction() {
    GadgetCheck c{"triangle-split reduction preserves 3-colourability (n <= 4)", true, std::nullopt, ""};
    std::size_t graphs = 0;
    for (int n = 0; n <= 4 && c.passed; ++n)
        for_each_graph(n, [&](const Graph& g) {
            ++graphs;
            const auto tsd = reduce_3col_to_tsd(g);
            if (has_q_colouring(g, 3) != has_q_colouring(tsd.graph, 3)) {
                c.passed = false;
                c.counterexample = serialize_graph(g);
                return false;
            }
            return true;
        });
    if (c.passed)
        c.detail = std::to_string(graphs) + " graphs";
    return c;
}

GadgetCheck check_subdivision() {
    GadgetCheck c{"3-subdivision preserves minimum FVS (n <= 6)", true, std::nullopt, ""};
    std::size_t graphs = 0;
    for (int n = 0; n <= 6 && c.passed; ++n)
        for_each_graph(n, [&](const Graph& g) {
            ++graphs;
            const std::int64_t value = *min_fvs_size(g).value;
            const auto sub = reduce_fvs_to_bg6(g, value);
            const WeightFn unit(static_cast<std::size_t>(sub.graph.vertex_count()), 1);
            const bool same = has_fvs_within(sub.graph, unit, value) &&
                              (value == 0 || !has_fvs_within(sub.graph, unit, value - 1));
            if (!same) {
                c.passed = false;
                c.counterexample = serialize_graph(g);
                return false;
            }
            return true;
        });
    if (c.passed)
        c.detail = std::to_string(graphs) + " graphs";
    return c;
}

TsdInstance forced_no(TsdInstance inst, Vertex x_member, int triangle) {
    for (int s = 0; s < 3; ++s)
        inst.graph.add_edge(inst.x[x_member], inst.y[3 * triangle + s]);
    return inst;
}

const GadgetRange& range_named(const CompositionOutput& out, const std::string& label) {
    for (const auto& r : out.gadget_index)
        if (r.label == label)
            return r;
    throw InvariantFailure("composition has no block '" + label + "'");
}

GadgetCheck check_colouring_claims() {
    GadgetCheck c{"chromatic composition: palette, selector, triangle and block colour claims", false, std::nullopt, ""};
    Graph edge(2);
    edge.add_edge(0, 1);
    const TsdInstance yes = reduce_3col_to_tsd(edge);
    const TsdInstance no = forced_no(yes, 0, 0);
    // only member 2 is 3-colourable
    const std::vector<TsdInstance> batch{no, yes, no, no};
    const auto out = compose_chromatic_vc(batch);
    const Graph& g = out.instance.graph;
    auto fail = [&](std::string why) {
        c.counterexample = serialize_graph(g);
        c.detail = std::move(why);
        return c;
    };
    const int q = static_cast<int>(out.instance.ell);
    const auto colouring = is_q_colorable(g, q);
    if (!colouring)
        return fail("composed graph has no " + std::to_string(q) + "-colouring");
    const auto& col = *colouring;
    const int log_t = out.report.log_t;
    const auto& palette = range_named(out, "palette");
    const auto& selectors = range_named(out, "selectors");
    const auto& triangles = range_named(out, "T*");
    const Vertex w = palette.first + log_t, x = w + 1, y = w + 2, z = w + 3;

    std::vector<int> palette_colours;
    for (Vertex v = palette.first; v <= palette.last; ++v)
        palette_colours.push_back(col[v]);
    std::sort(palette_colours.begin(), palette_colours.end());
    if (std::adjacent_find(palette_colours.begin(), palette_colours.end()) != palette_colours.end())
        return fail("palette is not rainbow");
    int selected = 0;
    for (int j = 0; j < log_t; ++j) {
        const Vertex q0 = selectors.first + 2 * j, q1 = q0 + 1;
        const int pj = col[palette.first + j];
        const bool ok = (col[q0] == pj && col[q1] == col[w]) || (col[q1] == pj && col[q0] == col[w]);
        if (!ok)
            return fail("selector pair " + std::to_string(j + 1) + " does not use the colours of w and p_j");
        selected = selected * 2 + (col[q1] == pj ? 1 : 0);
    }
    for (Vertex v = triangles.first; v <= triangles.last; ++v)
        if (col[v] != col[x] && col[v] != col[y] && col[v] != col[z])
            return fail("triangle vertex " + std::to_string(v + 1) + " leaves the colours of x, y, z");
    for (int i = 1; i <= out.report.t; ++i) {
        const auto& block = range_named(out, "X_" + std::to_string(i));
        for (Vertex v = block.first; v <= block.last; ++v)
            if (col[v] == col[w])
                return fail("block vertex " + std::to_string(v + 1) + " shares the colour of w");
        std::vector<Vertex> keep;
        for (Vertex v = block.first; v <= block.last; ++v)
            keep.push_back(v);
        for (Vertex v = triangles.first; v <= triangles.last; ++v)
            keep.push_back(v);
        if (!are_isomorphic_small(induced_subgraph(g, VertexSet(keep)), batch[i - 1].graph))
            return fail("block " + std::to_string(i) + " with the shared triangles is not isomorphic to its input");
    }
    // instance t is encoded by the all-zero string
    const int chosen = selected == 0 ? out.report.t : selected;
    if (chosen != 2)
        return fail("selectors encode instance " + std::to_string(chosen) + ", expected 2");
    c.passed = true;
    c.detail = std::to_string(q) + "-colouring selects instance 2";
    return c;
}

GadgetCheck check_clique_claims() {
    GadgetCheck c{"clique composition: witness takes l from C, C(n,2) from D, one from B", false, std::nullopt, ""};
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    const std::vector<BudgetedInstance> batch{{Problem::Clique, Graph(3), 2, {}}, {Problem::Clique, path, 2, {}}};
    const auto out = compose_clique_vc(batch);
    const Graph& g = out.instance.graph;
    auto fail = [&](std::string why) {
        c.counterexample = serialize_graph(g);
        c.detail = std::move(why);
        return c;
    };
    const auto best = max_clique(g);
    const auto& d = range_named(out, "D");
    const auto& cset = range_named(out, "C");
    const auto& b = range_named(out, "B");
    const int n = 3, ell = 2;
    int in_c = 0, in_d = 0, in_b = 0;
    Vertex chosen_b = -1;
    std::vector<int> columns;
    for (Vertex v : best.witness) {
        if (v >= d.first && v <= d.last)
            ++in_d;
        if (v >= cset.first && v <= cset.last) {
            ++in_c;
            columns.push_back((v - cset.first) % n);
        }
        if (v >= b.first && v <= b.last) {
            ++in_b;
            chosen_b = v - b.first;
        }
    }
    if (in_c > ell || in_d > choose2(n) || in_b > 1)
        return fail("witness exceeds a block limit");
    if (best.size != out.instance.ell)
        return fail("maximum clique " + std::to_string(best.size) + " differs from l' on a YES batch");
    if (in_c != ell || in_d != choose2(n) || in_b != 1 || chosen_b != 1)
        return fail("witness does not pick instance 2 with full C and D parts");
    std::sort(columns.begin(), columns.end());
    if (std::adjacent_find(columns.begin(), columns.end()) != columns.end())
        return fail("witness uses a column of C twice");
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (std::size_t j = i + 1; j < columns.size(); ++j)
            if (!path.has_edge(columns[i], columns[j]))
                return fail("selected columns are not a clique of the chosen input");
    c.passed = true;
    c.detail = "clique of size " + std::to_string(best.size);
    return c;
}

}  // namespace

GadgetSuiteResult run_gadget_suite() {
    GadgetSuiteResult r;
    r.checks.push_back(check_odd_wheels());
    r.checks.push_back(check_bk4());
    r.checks.push_back(check_merge_property());
    r.checks.push_back(check_tsd_reduction());
    r.checks.push_back(check_subdivision());
    r.checks.push_back(check_colouring_claims());
    r.checks.push_back(check_clique_claims());
    return r;
}

std::vector<AnyInstance> random_clique_batch(std::mt19937_64& rng) {
    const int t = uniform(rng, 2, 4);
    const int n = uniform(rng, 3, 4);
    const int ell = uniform(rng, 2, n);
    std::vector<AnyInstance> batch;
    for (int i = 0; i < t; ++i) {
        const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
        batch.emplace_back(BudgetedInstance{Problem::Clique, random_graph(rng, n, p), ell, {}});
    }
    return batch;
}

std::vector<AnyInstance> random_tsd_batch(std::mt19937_64& rng) {
    const int t = uniform(rng, 0, 1) ? 4 : 2;
    const int n = uniform(rng, 2, 3);
    const int m = n == 2 ? 1 : uniform(rng, 1, 2);
    const bool all_no = uniform(rng, 0, 2) == 0;
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<AnyInstance> batch;
    for (int i = 0; i < t; ++i) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        Graph g(n, std::span<const Edge>(pairs.data(), static_cast<std::size_t>(m)));
        TsdInstance inst = reduce_3col_to_tsd(g);
        if (all_no || uniform(rng, 0, 1))
            inst = forced_no(std::move(inst), uniform(rng, 0, n - 1), uniform(rng, 0, m - 1));
        batch.emplace_back(std::move(inst));
    }
    return batch;
}

namespace {

// Random bipartite graph with X = 0..nx-1 and Y = nx..nx+ny-1 (ids shuffled
// when `shuffle_ids`); with `girth6`, resampled until the girth is >= 6.
Bg6Instance random_bipartite(std::mt19937_64& rng, int nx, int ny, std::int64_t ell, Problem problem, bool girth6) {
    const int n = nx + ny;
    for (;;) {
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        const double p = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < ny; ++b)
                if (coin(rng))
                    g.add_edge(perm[a], perm[nx + b]);
        if (girth6) {
            auto gi = girth(g);
            if (gi && *gi < 6)
                continue;
        }
        std::vector<Vertex> x(perm.begin(), perm.begin() + nx);
        std::vector<Vertex> y(perm.begin() + nx, perm.end());
        return {problem, std::move(g), VertexSet(std::move(x)), VertexSet(std::move(y)), ell};
    }
}

}  // namespace

std::vector<AnyInstance> random_bg6_batch(std::mt19937_64& rng) {
    const int t = uniform(rng, 1, 3);
    // Within |X|, |Y| <= 3 the only cycle of length >= 6 is C6, so half the
    // batches use (3, 3) to have inputs that are not forests.
    const bool cyclic = uniform(rng, 0, 1) == 1;
    const int nx = cyclic ? 3 : uniform(rng, 1, 3);
    const int ny = cyclic ? 3 : uniform(rng, 1, 3);
    const std::int64_t ell = uniform(rng, 0, 1);
    std::vector<AnyInstance> batch;
    for (int i = 0; i < t; ++i) {
        std::optional<Bg6Instance> inst;
        if (cyclic && uniform(rng, 0, 3) != 0) {
            std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph g(6);
            for (int k = 0; k < 6; ++k)
                g.add_edge(perm[k], perm[(k + 1) % 6]);
            // alternate positions of the cycle form the two sides
            inst = Bg6Instance{Problem::FvsBg6, std::move(g), VertexSet{perm[0], perm[2], perm[4]},
                               VertexSet{perm[1], perm[3], perm[5]}, ell};
        }
        // Otherwise prefer the subdivision reduction when its sides fit.
        for (int attempt = 0; attempt < 8 && !inst && uniform(rng, 0, 1); ++attempt) {
            auto sub = reduce_fvs_to_bg6(random_graph(rng, uniform(rng, 1, 3), 0.5), ell);
            if (static_cast<int>(sub.x.size()) == nx && static_cast<int>(sub.y.size()) == ny)
                inst = std::move(sub);
        }
        if (!inst)
            inst = random_bipartite(rng, nx, ny, ell, Problem::FvsBg6, true);
        batch.emplace_back(std::move(*inst));
    }
    return batch;
}

std::vector<AnyInstance> random_is_batch(std::mt19937_64& rng) {
    // The A4 grid: n = 2, m = 1, t = 2. The only such graph is a single edge.
    const std::int64_t ell = uniform(rng, 0, 2);
    Graph edge(2);
    edge.add_edge(0, 1);
    std::vector<AnyInstance> batch;
    for (int i = 0; i < 2; ++i)
        batch.emplace_back(BudgetedInstance{Problem::IndependentSet, edge, ell, {}});
    return batch;
}

std::vector<AnyInstance> random_bipartite_batch(std::mt19937_64& rng) {
    const int nx = uniform(rng, 0, 3) ? uniform(rng, 2, 3) : 1;
    const int ny = uniform(rng, 0, 3) ? uniform(rng, 2, 3) : 1;
    const std::int64_t ell = uniform(rng, 0, 3) == 0 ? 2 : uniform(rng, 0, 1);
    std::vector<AnyInstance> batch;
    for (int i = 0; i < 2; ++i)
        batch.emplace_back(random_bipartite(rng, nx, ny, ell, Problem::FvsBipartite, false));
    return batch;
}

namespace {

// Up to three clauses of width 1..3 over at most four variables, at most six
// literals in total.
CnfFormula random_formula(std::mt19937_64& rng, int max_vars, int max_width) {
    CnfFormula f;
    f.variable_count = uniform(rng, 1, max_vars);
    const int clauses = uniform(rng, 1, 3);
    int budget = 6;
    for (int c = 0; c < clauses && budget > 0; ++c) {
        const int width = std::min(uniform(rng, 1, max_width), budget);
        Clause clause;
        for (int k = 0; k < width; ++k) {
            const int var = uniform(rng, 1, f.variable_count);
            clause.push_back(uniform(rng, 0, 1) ? var : -var);
        }
        budget -= width;
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

// Rejection-samples an unsatisfiable formula; short clauses over few
// variables make these common.
CnfFormula random_unsat_formula(std::mt19937_64& rng) {
    for (;;) {
        CnfFormula f = random_formula(rng, 2, 2);
        if (!cnf_satisfiable(f))
            return f;
    }
}

}  // namespace

std::vector<CnfFormula> random_cnf_batch(std::mt19937_64& rng) {
    const int t = uniform(rng, 2, 6);
    const bool all_unsat = uniform(rng, 0, 2) == 0;
    std::vector<CnfFormula> batch;
    for (int i = 0; i < t; ++i) {
        if (!batch.empty() && uniform(rng, 0, 3) == 0) {
            batch.push_back(batch[uniform(rng, 0, static_cast<int>(batch.size()) - 1)]);
            continue;
        }
        batch.push_back(all_unsat || uniform(rng, 0, 1) ? random_unsat_formula(rng) : random_formula(rng, 4, 3));
    }
    return batch;
}

bool SuiteResult::all_passed() const {
    return std::all_of(sections.begin(), sections.end(), [](const SuiteSection& s) { return s.passed; });
}

SuiteSection run_or_section(Construction c, std::uint64_t seed, std::size_t batches, SuiteResult& sink) {
    SuiteSection section;
    section.name = std::string(tag(c));
    std::seed_seq seq{seed, static_cast<std::uint64_t>(c) + 1};
    std::mt19937_64 rng(seq);
    const auto start = Clock::now();
    for (std::size_t b = 0; b < batches; ++b) {
        std::vector<AnyInstance> batch;
        switch (c) {
        case Construction::CliqueVc: batch = random_clique_batch(rng); break;
        case Construction::ChromVc: batch = random_tsd_batch(rng); break;
        case Construction::FvsDcc: batch = random_bg6_batch(rng); break;
        case Construction::FvsDc: batch = random_is_batch(rng); break;
        case Construction::WfvsVc: batch = random_bipartite_batch(rng); break;
        }
        VerificationReport r;
        try {
            r = verify_or_equivalence(c, batch);
        } catch (const Error& e) {
            section.failure = "batch " + std::to_string(b + 1) + ": " + e.what() + "\n" + serialize_batch(batch);
            break;
        }
        r.seed = seed;
        for (auto& id : r.instance_ids)
            id = "b" + std::to_string(b + 1) + "." + id;
        sink.records.push_back(tsv_record(r));
        ++section.batches;
        section.or_matches += r.or_match;
        section.audits_ok += r.audit.ok();
        section.yes_batches += r.composed_verdict;
        if (!r.or_match || !r.audit.ok()) {
            section.failure = "batch " + std::to_string(b + 1) + "\n" + format_report(r) + serialize_batch(batch);
            break;
        }
    }
    section.seconds = ms_since(start) / 1000.0;
    section.passed = section.failure.empty() && section.batches == batches;
    return section;
}

SuiteSection run_pipeline_section(std::uint64_t seed, std::size_t batches) {
    SuiteSection section;
    section.name = "pipeline";
    std::seed_seq seq{seed, std::uint64_t{99}};
    std::mt19937_64 rng(seq);
    const auto start = Clock::now();
    for (std::size_t b = 0; b < batches && section.failure.empty(); ++b) {
        const auto formulas = random_cnf_batch(rng);
        bool expected = false;
        for (const auto& f : formulas)
            expected = expected || cnf_satisfiable(f).has_value();
        bool match = true, trace_ok = true;
        try {
            for (KernelStage stage : {KernelStage::Identity, KernelStage::TrivialOracle}) {
                PipelineConfig config;
                config.kernel_stage = stage;
                auto [tuple, trace] = run_distillation(formulas, config);
                const bool got = or_verdict(parse_or_tuple(write_or_tuple(tuple)), config.limits);
                match = match && got == expected;
                trace_ok = trace_ok && trace.dedupe_bound_holds && trace.class_bound_holds &&
                           trace.deduped_count <= trace.input_count && trace.class_count <= trace.deduped_count &&
                           trace.input_count == formulas.size();
            }
        } catch (const Error& e) {
            match = false;
            section.failure = std::string(e.what()) + "\n";
        }
        ++section.batches;
        section.or_matches += match;
        section.audits_ok += trace_ok;
        section.yes_batches += expected;
        if (!match || !trace_ok) {
            section.failure += "batch " + std::to_string(b + 1) + "\n";
            for (const auto& f : formulas)
                section.failure += write_cnf(f);
        }
    }
    section.seconds = ms_since(start) / 1000.0;
    section.passed = section.failure.empty() && section.batches == batches;
    return section;
}

SuiteResult run_suite(std::uint64_t seed, Grid grid, const std::function<void(const SuiteSection&)>& progress) {
    SuiteResult result;
    result.seed = seed;
    auto emit = [&](SuiteSection s) {
        if (progress)
            progress(s);
        result.sections.push_back(std::move(s));
    };

    {
        const auto start = Clock::now();
        const auto gadgets = run_gadget_suite();
        SuiteSection s;
        s.name = "gadgets";
        s.batches = gadgets.checks.size();
        for (const auto& check : gadgets.checks) {
            s.or_matches += check.passed;
            if (!check.passed && s.failure.empty())
                s.failure = check.name + ": " + check.detail + "\n" + check.counterexample.value_or("");
        }
        s.audits_ok = s.or_matches;
        s.passed = gadgets.all_passed();
        s.seconds = ms_since(start) / 1000.0;
        emit(std::move(s));
    }
    const bool small = grid == Grid::Small;
    const std::pair<Construction, std::size_t> plan[] = {
        {Construction::CliqueVc, small ? 20u : 200u}, {Construction::ChromVc, small ? 10u : 100u},
        {Construction::FvsDcc, small ? 10u : 100u},   {Construction::FvsDc, small ? 4u : 30u},
        {Construction::WfvsVc, small ? 10u : 100u},
    };
    for (auto [c, n] : plan)
        emit(run_or_section(c, seed, n, result));
    emit(run_pipeline_section(seed, small ? 6 : 50));
    return result;
}

}  // namespace crosscomp
