#include "crosscomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "crosscomp/errors.hpp"

namespace crosscomp {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::CountMismatch: return "count mismatch";
    case ParseErrorKind::InvariantViolation: return "invariant violation";
    case ParseErrorKind::UnknownTag: return "unknown tag";
    case ParseErrorKind::Unresolvable: return "unresolvable path";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + (column ? ":" + std::to_string(column) : std::string{}) + ": " +
            to_string(kind) + ": " + message),
      kind_(kind), line_(line), column_(column) {}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    auto copy = members_;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw PreconditionError("vertex set contains a duplicate member");
    if (!copy.empty() && copy.front() < 0)
        throw PreconditionError("vertex set contains a negative id");
}

bool VertexSet::contains(Vertex v) const {
    return std::find(members_.begin(), members_.end(), v) != members_.end();
}

VertexSet VertexSet::sorted() const {
    auto copy = members_;
    std::sort(copy.begin(), copy.end());
    return VertexSet(std::move(copy));
}

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw PreconditionError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count()) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return;
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

Vertex Graph::add_vertex(std::string label) {
    adjacency_.emplace_back();
    Vertex v = vertex_count() - 1;
    if (!label.empty())
        labels_[v] = std::move(label);
    return v;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

void Graph::set_label(Vertex v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end())
        return std::nullopt;
    return it->second;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                out.add_edge(u, v);
    for (const auto& [v, text] : g.labels())
        out.set_label(v, text);
    return out;
}

Graph subdivide_every_edge(const Graph& g, int inner) {
    if (inner < 1)
        throw PreconditionError("subdivision needs at least one inner vertex per edge");
    Graph out(g.vertex_count());
    for (const auto& [v, text] : g.labels())
        out.set_label(v, text);
    for (auto [u, v] : g.edges()) {
        Vertex prev = u;
        for (int i = 0; i < inner; ++i) {
            Vertex a = out.add_vertex();
            out.add_edge(prev, a);
            prev = a;
        }
        out.add_edge(prev, v);
    }
    return out;
}

Identification identify_vertex_sets(std::span<const Graph> graphs, std::span<const VertexSet> sets) {
    if (graphs.empty() || graphs.size() != sets.size())
        throw PreconditionError("identify_vertex_sets needs one set per graph and at least one graph");
    const std::size_t r = sets[0].size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (sets[i].size() != r)
            throw PreconditionError("identified sets must have equal cardinality");
        for (Vertex v : sets[i])
            if (v >= graphs[i].vertex_count())
                throw PreconditionError("identified set member out of range");
    }

    std::vector<std::vector<Vertex>> image(graphs.size());
    int next = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        image[i].assign(static_cast<std::size_t>(graphs[i].vertex_count()), -1);
        for (Vertex v = 0; v < graphs[i].vertex_count(); ++v)
            if (!sets[i].contains(v))
                image[i][v] = next++;
    }
    std::vector<Vertex> merged;
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            image[i][sets[i][j]] = next;
        merged.push_back(next++);
    }

    Graph out(next);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (auto [u, v] : graphs[i].edges())
            if (image[i][u] != image[i][v])
                out.add_edge(image[i][u], image[i][v]);
    return {std::move(out), VertexSet(std::move(merged))};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// 2-colouring by BFS; the smallest vertex of each component gets side 0.
std::optional<std::vector<int>> two_colouring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

}  // namespace

bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        std::size_t k = comp.size();
        std::size_t degree_sum = 0;
        for (Vertex v : comp)
            degree_sum += static_cast<std::size_t>(g.degree(v));
        if (degree_sum != k * (k - 1))
            return false;
    }
    return true;
}

bool is_forest(const Graph& g) {
    return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.vertex_count());
}

Girth girth(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            if (best && 2 * dist[u] >= *best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

GraphClassification classify_graph(const Graph& g) {
    GraphClassification out;
    if (auto side = two_colouring(g)) {
        out.is_bipartite = true;
        std::vector<Vertex> left, right;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            ((*side)[v] == 0 ? left : right).push_back(v);
        out.bipartition = std::make_pair(VertexSet(std::move(left)), VertexSet(std::move(right)));
    } else {
        out.is_bipartite = false;
    }
    out.is_cluster = is_cluster_graph(g);
    out.is_cocluster = is_cluster_graph(complement(g));
    out.girth = girth(g);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    auto order = keep.sorted();
    std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= g.vertex_count())
            throw PreconditionError("induced_subgraph: vertex out of range");
        index[order[i]] = static_cast<Vertex>(i);
    }
    Graph out(static_cast<int>(order.size()));
    for (Vertex u : order)
        for (Vertex w : g.neighbors(u))
            if (index[w] != -1 && u < w)
                out.add_edge(index[u], index[w]);
    for (const auto& [v, text] : g.labels())
        if (index[v] != -1)
            out.set_label(index[v], text);
    return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& drop) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!drop.contains(v))
            keep.push_back(v);
    return induced_subgraph(g, VertexSet(std::move(keep)));
}

bool validate_deletion_set(const Graph& g, const VertexSet& z, GraphClass target) {
    for (Vertex v : z)
        if (v >= g.vertex_count())
            throw PreconditionError("deletion set member out of range");
    Graph rest = remove_vertices(g, z);
    switch (target) {
    case GraphClass::Edgeless: return rest.edge_count() == 0;
    case GraphClass::Cluster: return is_cluster_graph(rest);
    case GraphClass::Cocluster: return is_cluster_graph(complement(rest));
    }
    return false;
}

Graph disjoint_union(std::span<const Graph> graphs) {
    int total = 0;
    for (const auto& g : graphs)
        total += g.vertex_count();
    Graph out(total);
    int offset = 0;
    for (const auto& g : graphs) {
        for (auto [u, v] : g.edges())
            out.add_edge(u + offset, v + offset);
        for (const auto& [v, text] : g.labels())
            out.set_label(v + offset, text);
        offset += g.vertex_count();
    }
    return out;
}

bool are_isomorphic_small(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n > 8 || b.vertex_count() > 8)
        throw PreconditionError("are_isomorphic_small refuses graphs above 8 vertices");
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = a.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace crosscomp
