#include "crosscomp/compositions.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "crosscomp/errors.hpp"

namespace crosscomp {

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 5> kConstructions{{
    {Construction::CliqueVc, "clique-vc"},
    {Construction::ChromVc, "chrom-vc"},
    {Construction::FvsDcc, "fvs-dcc"},
    {Construction::FvsDc, "fvs-dc"},
    {Construction::WfvsVc, "wfvs-vc"},
}};

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

int exact_log2(int t) {
    int log = 0;
    while ((1 << log) < t)
        ++log;
    if ((1 << log) != t)
        throw InvariantFailure("padded batch size is not a power of two");
    return log;
}

// Duplicates the last member until the size is a power of two, and at least 2.
template <typename T>
std::vector<T> pad_batch(std::span<const T> batch) {
    std::vector<T> out(batch.begin(), batch.end());
    std::size_t target = 2;
    while (target < out.size())
        target *= 2;
    while (out.size() < target)
        out.push_back(out.back());
    return out;
}

// Appends vertices and records labelled id ranges in creation order.
class Layout {
public:
    Vertex add(const std::string& label) { return graph.add_vertex(label); }

    void open(std::string label) { ranges.push_back({std::move(label), graph.vertex_count(), graph.vertex_count() - 1}); }
    void close() { ranges.back().last = graph.vertex_count() - 1; }

    Graph graph;
    std::vector<GadgetRange> ranges;
};

// Adds a K4-in-a-box; returns its 8 ids in gadget order (a, b, c, d, ab, bc, cd, da).
std::array<Vertex, 8> add_bk4(Layout& layout, const std::string& prefix) {
    const auto gadget = build_bk4();
    std::array<Vertex, 8> ids{};
    static constexpr std::array<const char*, 8> names{"a", "b", "c", "d", "ab", "bc", "cd", "da"};
    for (int i = 0; i < 8; ++i)
        ids[i] = layout.add(prefix + names[i]);
    for (auto [u, v] : gadget.graph.edges())
        layout.graph.add_edge(ids[u], ids[v]);
    return ids;
}

template <typename T>
bool any_malformed(Problem source, std::span<const T> batch) {
    for (const auto& inst : batch)
        if (equivalence_key(source, AnyInstance(inst)).malformed)
            return true;
    return false;
}

template <typename T>
EquivalenceKey common_key(Problem source, std::span<const T> batch) {
    if (batch.empty())
        throw PreconditionError("composition needs a nonempty batch");
    EquivalenceKey first = equivalence_key(source, AnyInstance(batch.front()));
    for (const auto& inst : batch)
        if (equivalence_key(source, AnyInstance(inst)) != first)
            throw PreconditionError("batch mixes equivalence classes " + to_string(first) + " and " +
                                    to_string(equivalence_key(source, AnyInstance(inst))));
    return first;
}

CompositionOutput canonical_no_output(Problem target, int t_input) {
    CompositionOutput out;
    out.instance = canonical_no_instance(target);
    out.report.t_input = t_input;
    out.report.t = t_input;
    out.report.canonical_no = true;
    out.report.expected_ell_prime = out.instance.ell;
    out.report.expected_k_prime = out.instance.param_k;
    out.gadget_index.push_back({"canonical-no", 0, out.instance.graph.vertex_count() - 1});
    return out;
}

void finish(CompositionOutput& out) {
    if (out.instance.param_k != out.report.expected_k_prime)
        throw InvariantFailure("composed parameter k' = " + std::to_string(out.instance.param_k) +
                               " differs from the closed form " + std::to_string(out.report.expected_k_prime));
    if (out.instance.ell != out.report.expected_ell_prime)
        throw InvariantFailure("composed budget differs from the closed form");
    if (auto err = check_param(out.instance))
        throw InvariantFailure("composed instance is malformed: " + *err);
}

ParamInstance make_param(Problem target, Graph graph, std::vector<Vertex> z, std::int64_t ell) {
    std::sort(z.begin(), z.end());
    ParamInstance p;
    p.problem = target;
    p.param_k = static_cast<std::int64_t>(z.size());
    p.graph = std::move(graph);
    p.deletion_set = VertexSet(std::move(z));
    p.ell = ell;
    return p;
}

std::vector<Vertex> range_ids(const GadgetRange& r) {
    std::vector<Vertex> ids;
    for (Vertex v = r.first; v <= r.last; ++v)
        ids.push_back(v);
    return ids;
}

}  // namespace

Bk4Gadget build_bk4() {
    Graph g(8);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v)
            g.add_edge(u, v);
    constexpr std::array<Edge, 4> box{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    for (int i = 0; i < 4; ++i) {
        g.add_edge(4 + i, box[i].first);
        g.add_edge(4 + i, box[i].second);
    }
    g.set_label(0, "bk4:a:terminal0");
    g.set_label(1, "bk4:b:terminal1");
    g.set_label(2, "bk4:c:terminal0");
    g.set_label(3, "bk4:d:terminal1");
    return {std::move(g), VertexSet{0, 2}, VertexSet{1, 3}};
}

Graph odd_wheel(int rim) {
    if (rim < 3 || rim % 2 == 0)
        throw PreconditionError("odd wheel needs an odd rim of length >= 3");
    Graph g(rim + 1);
    g.set_label(0, "hub");
    for (int i = 1; i <= rim; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % rim + 1);
    }
    return g;
}

std::string to_string(const EquivalenceKey& key) {
    if (key.malformed)
        return "Malformed";
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < key.signature.size(); ++i)
        out << (i ? "," : "") << key.signature[i];
    out << ')';
    return out.str();
}

EquivalenceKey equivalence_key(Problem source, const AnyInstance& inst) {
    const EquivalenceKey malformed{true, {}};
    switch (source) {
    case Problem::Clique:
    case Problem::IndependentSet: {
        const auto* b = std::get_if<BudgetedInstance>(&inst);
        if (!b || b->problem != source || check_budgeted(*b))
            return malformed;
        const std::int64_t n = b->graph.vertex_count();
        // asking for more vertices than the graph has
        if (*b->ell > n)
            return malformed;
        if (source == Problem::Clique)
            return {false, {n, *b->ell}};
        return {false, {n, static_cast<std::int64_t>(b->graph.edge_count()), *b->ell}};
    }
    case Problem::ThreeColTsd: {
        const auto* t = std::get_if<TsdInstance>(&inst);
        if (!t || check_tsd(*t))
            return malformed;
        return {false, {static_cast<std::int64_t>(t->x.size()), t->triangle_count()}};
    }
    case Problem::FvsBg6:
    case Problem::FvsBipartite: {
        const auto* b = std::get_if<Bg6Instance>(&inst);
        if (!b)
            return malformed;
        Bg6Instance as_source = *b;
        as_source.problem = source;
        if (check_bg6(as_source))
            return malformed;
        return {false, {static_cast<std::int64_t>(b->x.size()), static_cast<std::int64_t>(b->y.size()), b->ell}};
    }
    default: return malformed;
    }
}

std::size_t instance_size(const AnyInstance& inst) {
    const Graph& g = graph_of(inst);
    return static_cast<std::size_t>(g.vertex_count()) + g.edge_count() + 1;
}

std::map<EquivalenceKey, std::vector<AnyInstance>> partition_instances(Problem source,
                                                                       std::span<const AnyInstance> batch) {
    std::map<EquivalenceKey, std::vector<AnyInstance>> classes;
    std::size_t max_size = 1;
    for (const auto& inst : batch) {
        classes[equivalence_key(source, inst)].push_back(inst);
        max_size = std::max(max_size, instance_size(inst));
    }
    if (classes.size() > max_size * max_size * max_size + 1)
        throw InvariantFailure("class count " + std::to_string(classes.size()) + " exceeds the polynomial bound");
    return classes;
}

std::string_view tag(Construction c) {
    for (auto [k, text] : kConstructions)
        if (k == c)
            return text;
    return "";
}

std::optional<Construction> construction_from_tag(std::string_view text) {
    for (auto [k, name] : kConstructions)
        if (name == text)
            return k;
    return std::nullopt;
}

Problem source_problem(Construction c) {
    switch (c) {
    case Construction::CliqueVc: return Problem::Clique;
    case Construction::ChromVc: return Problem::ThreeColTsd;
    case Construction::FvsDcc: return Problem::FvsBg6;
    case Construction::FvsDc: return Problem::IndependentSet;
    case Construction::WfvsVc: return Problem::FvsBipartite;
    }
    return Problem::Bare;
}

Problem target_problem(Construction c) {
    switch (c) {
    case Construction::CliqueVc: return Problem::CliqueVc;
    case Construction::ChromVc: return Problem::ChromVc;
    case Construction::FvsDcc: return Problem::FvsDcc;
    case Construction::FvsDc: return Problem::FvsDc;
    case Construction::WfvsVc: return Problem::WfvsVc;
    }
    return Problem::Bare;
}

ParamInstance canonical_no_instance(Problem target) {
    switch (target) {
    case Problem::CliqueVc: return make_param(target, Graph(1), {}, 2);
    case Problem::ChromVc: {
        Graph k2(2);
        k2.add_edge(0, 1);
        return make_param(target, std::move(k2), {0}, 1);
    }
    case Problem::FvsDc:
    case Problem::FvsDcc:
    case Problem::WfvsVc: {
        Graph c3(3);
        c3.add_edge(0, 1);
        c3.add_edge(1, 2);
        c3.add_edge(0, 2);
        auto p = make_param(target, std::move(c3), {0, 1, 2}, 0);
        if (target == Problem::WfvsVc)
            p.weights = WeightFn(3, 1);
        return p;
    }
    default: throw PreconditionError("no canonical instance for '" + std::string(tag(target)) + "'");
    }
}

ParamInstance canonical_yes_instance(Problem target) {
    auto p = canonical_no_instance(target);
    // Each NO instance misses by exactly one unit of budget.
    p.ell = target == Problem::CliqueVc ? 1 : p.ell + 1;
    return p;
}

int instance_bit(int i, int t, int j) {
    const int log_t = exact_log2(t);
    if (i < 1 || i > t || j < 1 || j > log_t)
        throw PreconditionError("instance bit out of range");
    return ((i % t) >> (log_t - j)) & 1;
}

CompositionOutput compose_clique_vc(std::span<const BudgetedInstance> batch) {
    if (batch.empty())
        throw PreconditionError("composition needs a nonempty batch");
    const int t = static_cast<int>(batch.size());
    if (any_malformed(Problem::Clique, batch))
        return canonical_no_output(Problem::CliqueVc, t);
    const auto key = common_key(Problem::Clique, batch);
    const int n = static_cast<int>(key.signature[0]);
    const int ell = static_cast<int>(key.signature[1]);

    Layout layout;
    // D: for each pair p < q the vertices w_{p,q}, w_{p,^q}, w_{^p,q}.
    struct PairVertices {
        int p, q;
        Vertex both, hat_q, hat_p;
    };
    std::vector<PairVertices> pairs;
    layout.open("D");
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const std::string pq = std::to_string(p + 1) + "," + std::to_string(q + 1);
            Vertex a = layout.add("D:w(" + pq + ")");
            Vertex b = layout.add("D:w(" + pq + "^)");
            Vertex c = layout.add("D:w(^" + pq + ")");
            pairs.push_back({p, q, a, b, c});
        }
    layout.close();
    // C: v_{i,j}, i in [ell], j in [n].
    layout.open("C");
    std::vector<std::vector<Vertex>> sel(ell, std::vector<Vertex>(n));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < n; ++j)
            sel[i][j] = layout.add("C:v(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    layout.close();
    layout.open("B");
    std::vector<Vertex> inst_vertices;
    for (int i = 0; i < t; ++i)
        inst_vertices.push_back(layout.add("B:u" + std::to_string(i + 1)));
    layout.close();

    Graph& g = layout.graph;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = 0; i2 < ell; ++i2)
                for (int j2 = 0; j2 < n; ++j2)
                    if (i != i2 && j != j2)
                        g.add_edge(sel[i][j], sel[i2][j2]);
    for (const auto& pv : pairs) {
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < n; ++j) {
                g.add_edge(pv.both, sel[i][j]);
                if (j != pv.q)
                    g.add_edge(pv.hat_q, sel[i][j]);
                if (j != pv.p)
                    g.add_edge(pv.hat_p, sel[i][j]);
            }
    }
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            for (Vertex u : {pairs[a].both, pairs[a].hat_q, pairs[a].hat_p})
                for (Vertex v : {pairs[b].both, pairs[b].hat_q, pairs[b].hat_p})
                    g.add_edge(u, v);
    for (int i = 0; i < t; ++i) {
        Vertex u = inst_vertices[i];
        for (const auto& row : sel)
            for (Vertex v : row)
                g.add_edge(u, v);
        for (const auto& pv : pairs) {
            if (batch[i].graph.has_edge(pv.p, pv.q)) {
                g.add_edge(u, pv.both);
            } else {
                g.add_edge(u, pv.hat_q);
                g.add_edge(u, pv.hat_p);
            }
        }
    }

    std::vector<Vertex> z = range_ids(layout.ranges[0]);
    auto c_ids = range_ids(layout.ranges[1]);
    z.insert(z.end(), c_ids.begin(), c_ids.end());

    CompositionOutput out;
    out.report = {t, t, n, 0, 0, ell, 0, ell + 1 + choose2(n), std::int64_t{ell} * n + 3 * choose2(n), false};
    out.instance = make_param(Problem::CliqueVc, std::move(layout.graph), std::move(z), ell + 1 + choose2(n));
    out.gadget_index = std::move(layout.ranges);
    finish(out);
    return out;
}

CompositionOutput compose_chromatic_vc(std::span<const TsdInstance> input, int max_t) {
    if (input.empty())
        throw PreconditionError("composition needs a nonempty batch");
    const int t_input = static_cast<int>(input.size());
    if (t_input > max_t)
        throw PreconditionError("batch of " + std::to_string(t_input) + " exceeds the configured ceiling " +
                                std::to_string(max_t));
    if (any_malformed(Problem::ThreeColTsd, input))
        return canonical_no_output(Problem::ChromVc, t_input);
    const auto key = common_key(Problem::ThreeColTsd, input);
    const int n = static_cast<int>(key.signature[0]);
    const int m = static_cast<int>(key.signature[1]);
    const auto batch = pad_batch(input);
    const int t = static_cast<int>(batch.size());
    const int log_t = exact_log2(t);

    Layout layout;
    layout.open("palette");
    std::vector<Vertex> p(log_t);
    for (int j = 0; j < log_t; ++j)
        p[j] = layout.add("palette:p" + std::to_string(j + 1));
    const Vertex w = layout.add("palette:w");
    const Vertex x = layout.add("palette:x");
    const Vertex y = layout.add("palette:y");
    const Vertex z = layout.add("palette:z");
    layout.close();
    layout.open("selectors");
    std::vector<std::array<Vertex, 2>> q(log_t);
    for (int j = 0; j < log_t; ++j) {
        q[j][0] = layout.add("sel:q0:" + std::to_string(j + 1));
        q[j][1] = layout.add("sel:q1:" + std::to_string(j + 1));
    }
    layout.close();
    layout.open("T*");
    std::vector<Vertex> tri(3 * static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        for (int s = 0; s < 3; ++s)
            tri[3 * j + s] = layout.add("T*:" + std::string(1, "abc"[s]) + std::to_string(j + 1));
    layout.close();
    std::vector<std::vector<Vertex>> xs(t);
    for (int i = 0; i < t; ++i) {
        layout.open("X_" + std::to_string(i + 1));
        for (int r = 0; r < n; ++r)
            xs[i].push_back(layout.add("X:" + std::to_string(i + 1) + ":" + std::to_string(r + 1)));
        layout.close();
    }

    Graph& g = layout.graph;
    std::vector<Vertex> palette = p;
    palette.insert(palette.end(), {w, x, y, z});
    for (std::size_t a = 0; a < palette.size(); ++a)
        for (std::size_t b = a + 1; b < palette.size(); ++b)
            g.add_edge(palette[a], palette[b]);
    for (int i = 0; i < t; ++i)
        for (Vertex v : xs[i])
            g.add_edge(v, w);
    for (int j = 0; j < m; ++j) {
        g.add_edge(tri[3 * j], tri[3 * j + 1]);
        g.add_edge(tri[3 * j + 1], tri[3 * j + 2]);
        g.add_edge(tri[3 * j], tri[3 * j + 2]);
    }
    for (Vertex v : tri) {
        for (Vertex pj : p)
            g.add_edge(v, pj);
        g.add_edge(v, w);
    }
    for (int j = 0; j < log_t; ++j) {
        g.add_edge(q[j][0], q[j][1]);
        for (int bit = 0; bit < 2; ++bit) {
            for (int k = 0; k < log_t; ++k)
                if (k != j)
                    g.add_edge(q[j][bit], p[k]);
            for (Vertex c : {x, y, z})
                g.add_edge(q[j][bit], c);
        }
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < log_t; ++j) {
            Vertex selector = q[j][instance_bit(i + 1, t, j + 1)];
            for (Vertex v : xs[i])
                g.add_edge(v, selector);
        }
    // Re-encode each instance's X-Y adjacency onto the shared triangles.
    for (int i = 0; i < t; ++i) {
        const auto& inst = batch[i];
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < 3 * m; ++s)
                if (inst.graph.has_edge(inst.x[r], inst.y[s]))
                    g.add_edge(xs[i][r], tri[s]);
    }

    std::vector<Vertex> zset;
    for (int k = 0; k < 3; ++k) {
        auto ids = range_ids(layout.ranges[k]);
        zset.insert(zset.end(), ids.begin(), ids.end());
    }
    CompositionOutput out;
    out.report = {t_input, t, n, m, 0, 0, log_t, log_t + 4, 3 * log_t + 4 + 3 * std::int64_t{m}, false};
    out.instance = make_param(Problem::ChromVc, std::move(layout.graph), std::move(zset), log_t + 4);
    out.gadget_index = std::move(layout.ranges);
    finish(out);
    return out;
}

CompositionOutput compose_fvs_cocluster(std::span<const Bg6Instance> batch) {
    if (batch.empty())
        throw PreconditionError("composition needs a nonempty batch");
    const int t = static_cast<int>(batch.size());
    if (any_malformed(Problem::FvsBg6, batch))
        return canonical_no_output(Problem::FvsDcc, t);
    const auto key = common_key(Problem::FvsBg6, batch);
    const int nx = static_cast<int>(key.signature[0]);
    const int ny = static_cast<int>(key.signature[1]);
    const std::int64_t ell = key.signature[2];

    std::vector<Graph> graphs;
    std::vector<VertexSet> ys;
    for (const auto& inst : batch) {
        graphs.push_back(inst.graph);
        ys.push_back(inst.y);
    }
    auto merged = identify_vertex_sets(graphs, ys);
    Graph g = std::move(merged.graph);
    // identify_vertex_sets lays out each X_i (ascending ids) before Y*.
    std::vector<GadgetRange> ranges;
    for (int i = 0; i < t; ++i) {
        ranges.push_back({"X_" + std::to_string(i + 1), i * nx, (i + 1) * nx - 1});
        for (int r = 0; r < nx; ++r)
            g.set_label(i * nx + r, "X:" + std::to_string(i + 1) + ":" + std::to_string(r + 1));
    }
    ranges.push_back({"Y*", t * nx, t * nx + ny - 1});
    for (int s = 0; s < ny; ++s)
        g.set_label(t * nx + s, "Y*:" + std::to_string(s + 1));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < nx; ++b)
                    g.add_edge(i * nx + a, j * nx + b);

    if (!is_cluster_graph(complement(remove_vertices(g, merged.merged))))
        throw InvariantFailure("G' - Y* is not a co-cluster graph");
    CompositionOutput out;
    const std::int64_t ell_prime = std::int64_t{t - 1} * nx + ell;
    out.report = {t, t, nx, 0, ny, ell, 0, ell_prime, ny, false};
    out.instance = make_param(Problem::FvsDcc, std::move(g), merged.merged.members(), ell_prime);
    out.gadget_index = std::move(ranges);
    finish(out);
    return out;
}

CompositionOutput compose_fvs_cluster(std::span<const BudgetedInstance> input) {
    if (input.empty())
        throw PreconditionError("composition needs a nonempty batch");
    const int t_input = static_cast<int>(input.size());
    if (any_malformed(Problem::IndependentSet, input))
        return canonical_no_output(Problem::FvsDc, t_input);
    const auto key = common_key(Problem::IndependentSet, input);
    const int n = static_cast<int>(key.signature[0]);
    const int m = static_cast<int>(key.signature[1]);
    const std::int64_t ell = key.signature[2];
    const auto batch = pad_batch(input);
    const int t = static_cast<int>(batch.size());
    const int log_t = exact_log2(t);

    Layout layout;
    // selectors[c][j]: the j-th gadget of selector copy c.
    std::vector<std::vector<std::array<Vertex, 8>>> selectors(n);
    layout.open("selectors");
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < log_t; ++j)
            selectors[c].push_back(
                add_bk4(layout, "sel" + std::to_string(c + 1) + ":bk4:" + std::to_string(j + 1) + ":"));
    layout.close();

    struct Checker {
        std::vector<Vertex> w;  // w_1..w_L
        Vertex out, in;
        int instance;
        Edge edge;
    };
    std::vector<Checker> checkers;
    layout.open("checkers");
    for (int i = 0; i < t; ++i)
        for (auto e : batch[i].graph.edges())
            for (int copy = 0; copy < n + 2; ++copy) {
                Checker ch;
                const std::string prefix = "chk:" + std::to_string(i + 1) + ":" + std::to_string(e.first + 1) + "-" +
                                           std::to_string(e.second + 1) + ":" + std::to_string(copy + 1) + ":";
                for (int j = 0; j < log_t; ++j)
                    ch.w.push_back(layout.add(prefix + "w" + std::to_string(j + 1)));
                ch.out = layout.add(prefix + "wout");
                ch.in = layout.add(prefix + "win");
                ch.instance = i + 1;
                ch.edge = e;
                checkers.push_back(std::move(ch));
            }
    layout.close();
    layout.open("B");
    std::vector<Vertex> b;
    for (int v = 0; v < n; ++v)
        b.push_back(layout.add("B:v" + std::to_string(v + 1)));
    layout.close();

    Graph& g = layout.graph;
    for (const auto& ch : checkers) {
        std::vector<Vertex> clique = ch.w;
        clique.push_back(ch.out);
        clique.push_back(ch.in);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t c = a + 1; c < clique.size(); ++c)
                g.add_edge(clique[a], clique[c]);
        for (int j = 0; j < log_t; ++j) {
            // 0-terminals are gadget vertices a, c; 1-terminals b, d.
            const int bit = instance_bit(ch.instance, t, j + 1);
            for (int c = 0; c < n; ++c) {
                const auto& gadget = selectors[c][j];
                g.add_edge(ch.w[j], gadget[bit == 0 ? 0 : 1]);
                g.add_edge(ch.w[j], gadget[bit == 0 ? 2 : 3]);
            }
        }
        g.add_edge(ch.out, b[ch.edge.first]);
        g.add_edge(ch.out, b[ch.edge.second]);
    }

    std::vector<Vertex> z = range_ids(layout.ranges[0]);
    z.insert(z.end(), b.begin(), b.end());
    const std::int64_t ell_prime = 2 * std::int64_t{n} * log_t + std::int64_t{n + 2} * t * m * log_t + (n - ell);
    CompositionOutput out;
    out.report = {t_input, t, n, m, 0, ell, log_t, ell_prime, n + 8 * std::int64_t{n} * log_t, false};
    if (!is_cluster_graph(remove_vertices(g, VertexSet(z))))
        throw InvariantFailure("G' - Z' is not a cluster graph");
    out.instance = make_param(Problem::FvsDc, std::move(layout.graph), std::move(z), ell_prime);
    out.gadget_index = std::move(layout.ranges);
    finish(out);
    return out;
}

CompositionOutput compose_wfvs_vc(std::span<const Bg6Instance> input) {
    if (input.empty())
        throw PreconditionError("composition needs a nonempty batch");
    const int t_input = static_cast<int>(input.size());
    if (any_malformed(Problem::FvsBipartite, input))
        return canonical_no_output(Problem::WfvsVc, t_input);
    const auto key = common_key(Problem::FvsBipartite, input);
    const int nx = static_cast<int>(key.signature[0]);
    const int ny = static_cast<int>(key.signature[1]);
    const std::int64_t ell = key.signature[2];
    const auto batch = pad_batch(input);
    const int t = static_cast<int>(batch.size());
    const int log_t = exact_log2(t);

    Layout layout;
    std::vector<std::array<Vertex, 8>> gadgets;
    layout.open("selectors");
    for (int j = 0; j < log_t; ++j)
        gadgets.push_back(add_bk4(layout, "bk4:" + std::to_string(j + 1) + ":"));
    layout.close();
    std::vector<std::vector<Vertex>> xs(t);
    for (int i = 0; i < t; ++i) {
        layout.open("X_" + std::to_string(i + 1));
        for (int r = 0; r < nx; ++r)
            xs[i].push_back(layout.add("X:" + std::to_string(i + 1) + ":" + std::to_string(r + 1)));
        layout.close();
    }
    layout.open("Y*");
    std::vector<Vertex> ystar;
    for (int s = 0; s < ny; ++s)
        ystar.push_back(layout.add("Y*:" + std::to_string(s + 1)));
    layout.close();

    Graph& g = layout.graph;
    for (int i = 0; i < t; ++i) {
        const auto& inst = batch[i];
        for (int r = 0; r < nx; ++r)
            for (int s = 0; s < ny; ++s)
                if (inst.graph.has_edge(inst.x[r], inst.y[s]))
                    g.add_edge(xs[i][r], ystar[s]);
        for (int j = 0; j < log_t; ++j) {
            const int bit = instance_bit(i + 1, t, j + 1);
            for (Vertex v : xs[i]) {
                g.add_edge(v, gadgets[j][bit == 0 ? 0 : 1]);
                g.add_edge(v, gadgets[j][bit == 0 ? 2 : 3]);
            }
        }
    }

    const std::int64_t gadget_weight = std::int64_t{t} * nx;
    WeightFn weights(static_cast<std::size_t>(g.vertex_count()), 1);
    for (const auto& gadget : gadgets)
        for (Vertex v : gadget)
            weights[v] = std::max<std::int64_t>(gadget_weight, 1);

    std::vector<Vertex> z = range_ids(layout.ranges[0]);
    z.insert(z.end(), ystar.begin(), ystar.end());
    const std::int64_t ell_prime = log_t * (2 * std::int64_t{t} * nx) + std::int64_t{t - 1} * nx + ell;
    CompositionOutput out;
    out.report = {t_input, t, nx, 0, ny, ell, log_t, ell_prime, ny + 8 * std::int64_t{log_t}, false};
    out.instance = make_param(Problem::WfvsVc, std::move(layout.graph), std::move(z), ell_prime);
    out.instance.weights = std::move(weights);
    out.gadget_index = std::move(layout.ranges);
    finish(out);
    return out;
}

namespace {

template <typename T>
std::vector<T> unwrap(Construction c, std::span<const AnyInstance> batch) {
    std::vector<T> out;
    for (const auto& inst : batch) {
        const auto* typed = std::get_if<T>(&inst);
        if (!typed)
            throw PreconditionError("construction " + std::string(tag(c)) + " cannot take a '" +
                                    std::string(tag(problem_of(inst))) + "' instance");
        out.push_back(*typed);
    }
    return out;
}

}  // namespace

CompositionOutput compose(Construction c, std::span<const AnyInstance> batch) {
    switch (c) {
    case Construction::CliqueVc: return compose_clique_vc(unwrap<BudgetedInstance>(c, batch));
    case Construction::ChromVc: return compose_chromatic_vc(unwrap<TsdInstance>(c, batch));
    case Construction::FvsDcc: return compose_fvs_cocluster(unwrap<Bg6Instance>(c, batch));
    case Construction::FvsDc: return compose_fvs_cluster(unwrap<BudgetedInstance>(c, batch));
    case Construction::WfvsVc: return compose_wfvs_vc(unwrap<Bg6Instance>(c, batch));
    }
    throw PreconditionError("unknown construction");
}

}  // namespace crosscomp
