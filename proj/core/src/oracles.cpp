#include "crosscomp/oracles.hpp"

#include <algorithm>
#include <string>

#include "bitset.hpp"
#include "crosscomp/errors.hpp"

namespace crosscomp {

using detail::Bits;

namespace {

void guard(int n, int ceiling, const char* solver) {
    if (n > ceiling)
        throw SizeGuardError(std::string(solver) + " refuses " + std::to_string(n) + " vertices (ceiling " +
                             std::to_string(ceiling) + ")");
}

std::vector<Bits> adjacency_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bits> rows(n, Bits(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            rows[u].set(v);
    return rows;
}

// Depth-first clique search over ascending id sequences, so the first clique
// reaching a size is the lexicographically smallest of that size. The bound is
// a greedy colouring of the candidates taken in descending order: bound[v]
// caps the clique number of {u in P : u >= v}.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int target) : n_(g.vertex_count()), rows_(adjacency_bits(g)), target_(target) {}

    void run() {
        Bits all(n_);
        for (int v = 0; v < n_; ++v)
            all.set(v);
        std::vector<Vertex> current;
        expand(current, all);
    }

    int best_size() const { return static_cast<int>(best_.size()); }
    const std::vector<Vertex>& best() const { return best_; }

private:
    bool done() const { return target_ > 0 && best_size() >= target_; }

    void expand(std::vector<Vertex>& current, const Bits& candidates) {
        std::vector<int> order;
        for (int v = candidates.first(); v != -1; v = candidates.next(v + 1))
            order.push_back(v);
        std::vector<int> bound(n_, 0);
        {
            std::vector<Bits> classes;
            int used = 0;
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int v = *it;
                std::size_t c = 0;
                for (; c < classes.size(); ++c) {
                    Bits clash = classes[c];
                    clash &= rows_[v];
                    if (clash.none())
                        break;
                }
                if (c == classes.size())
                    classes.emplace_back(n_);
                classes[c].set(v);
                used = std::max(used, static_cast<int>(c) + 1);
                bound[v] = used;
            }
        }
        const int have = static_cast<int>(current.size());
        for (int v : order) {
            int threshold = target_ > 0 ? target_ - 1 : best_size();
            if (have + bound[v] <= threshold)
                break;
            current.push_back(v);
            if (have + 1 > best_size()) {
                best_ = current;
                if (done()) {
                    current.pop_back();
                    return;
                }
            }
            Bits next = candidates;
            next &= rows_[v];
            next.clear_through(v);
            if (!next.none())
                expand(current, next);
            current.pop_back();
            if (done())
                return;
        }
    }

    int n_;
    std::vector<Bits> rows_;
    int target_;
    std::vector<Vertex> best_;
};

// DSATUR backtracking for q-colourability with an optional partial precolouring.
class ColourSearch {
public:
    ColourSearch(const Graph& g, int q) : g_(g), n_(g.vertex_count()), q_(q) {}

    bool solve(Colouring colour) {
        colour_.assign(n_, -1);
        forbidden_.assign(n_, std::vector<int>(q_, 0));
        used_count_.assign(q_, 0);
        for (Vertex v = 0; v < n_; ++v) {
            if (colour[v] < 0)
                continue;
            for (Vertex w : g_.neighbors(v))
                if (colour[w] == colour[v])
                    return false;
            paint(v, colour[v]);
        }
        return search();
    }

    const Colouring& colouring() const { return colour_; }

private:
    void paint(Vertex v, int c) {
        colour_[v] = c;
        ++used_count_[c];
        for (Vertex w : g_.neighbors(v))
            ++forbidden_[w][c];
    }

    void unpaint(Vertex v, int c) {
        colour_[v] = -1;
        --used_count_[c];
        for (Vertex w : g_.neighbors(v))
            --forbidden_[w][c];
    }

    bool search() {
        Vertex pick = -1;
        int pick_free = q_ + 1;
        int pick_degree = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            int free_colours = 0;
            for (int c = 0; c < q_; ++c)
                if (forbidden_[v][c] == 0)
                    ++free_colours;
            if (free_colours < pick_free || (free_colours == pick_free && g_.degree(v) > pick_degree)) {
                pick = v;
                pick_free = free_colours;
                pick_degree = g_.degree(v);
            }
        }
        if (pick == -1)
            return true;
        if (pick_free == 0)
            return false;
        bool tried_fresh = false;
        for (int c = 0; c < q_; ++c) {
            if (forbidden_[pick][c] != 0)
                continue;
            if (used_count_[c] == 0) {
                // unused colours are interchangeable
                if (tried_fresh)
                    continue;
                tried_fresh = true;
            }
            paint(pick, c);
            if (search())
                return true;
            unpaint(pick, c);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int q_;
    Colouring colour_;
    std::vector<std::vector<int>> forbidden_;
    std::vector<int> used_count_;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const SolverLimits& limits) {
    guard(g.vertex_count(), limits.clique_max_vertices, "max_clique");
    CliqueSearch search(g, 0);
    search.run();
    return {search.best_size(), VertexSet(search.best())};
}

int max_clique_size(const Graph& g, const SolverLimits& limits) { return max_clique(g, limits).size; }

std::optional<VertexSet> find_clique(const Graph& g, int size, const SolverLimits& limits) {
    guard(g.vertex_count(), limits.clique_max_vertices, "find_clique");
    if (size <= 0)
        return VertexSet{};
    if (size > g.vertex_count())
        return std::nullopt;
    CliqueSearch search(g, size);
    search.run();
    if (search.best_size() < size)
        return std::nullopt;
    return VertexSet(search.best());
}

std::optional<Colouring> is_q_colorable(const Graph& g, int q, const SolverLimits& limits) {
    const int n = g.vertex_count();
    guard(n, limits.coloring_max_vertices, "is_q_colorable");
    if (n == 0)
        return Colouring{};
    if (q <= 0)
        return std::nullopt;
    q = std::min(q, n);

    auto feasible = [&](const Colouring& partial) {
        ColourSearch search(g, q);
        return search.solve(partial);
    };

    Colouring partial(n, -1);
    if (!feasible(partial))
        return std::nullopt;
    // Fix vertices in id order to the smallest colour that keeps the rest
    // completable; this yields the lexicographically smallest colouring.
    for (Vertex v = 0; v < n; ++v) {
        bool placed = false;
        for (int c = 0; c < q && !placed; ++c) {
            partial[v] = c;
            if (feasible(partial))
                placed = true;
        }
        if (!placed)
            throw InvariantFailure("colouring canonicalisation lost feasibility");
    }
    return partial;
}

bool has_q_colouring(const Graph& g, int q, const SolverLimits& limits) {
    const int n = g.vertex_count();
    guard(n, limits.coloring_max_vertices, "has_q_colouring");
    if (n == 0)
        return true;
    if (q <= 0)
        return false;
    ColourSearch search(g, std::min(q, n));
    return search.solve(Colouring(n, -1));
}

ChromaticResult chromatic_number(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    guard(n, limits.coloring_max_vertices, "chromatic_number");
    if (n == 0)
        return {0, {}};
    for (int q = 1; q <= n; ++q)
        if (auto colouring = is_q_colorable(g, q, limits))
            return {q, std::move(*colouring)};
    throw InvariantFailure("no colouring with n colours");
}

CliqueResult max_independent_set(const Graph& g, const SolverLimits& limits) {
    return max_clique(complement(g), limits);
}

int max_independent_set_size(const Graph& g, const SolverLimits& limits) {
    return max_independent_set(g, limits).size;
}

VertexCoverResult min_vertex_cover(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    guard(n, limits.clique_max_vertices, "min_vertex_cover");
    const int target = n - max_independent_set_size(g, limits);

    // Greedy lexicographic construction: put v into the cover whenever a cover
    // of the target size still exists; otherwise v stays out, which forces
    // all of its neighbours in.
    std::vector<int> state(n, 0);  // 0 open, 1 in cover, 2 excluded
    auto feasible = [&]() {
        std::vector<Vertex> rest;
        int in_cover = 0;
        std::vector<int> forced(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (state[v] == 1)
                forced[v] = 1;
            if (state[v] == 2)
                for (Vertex w : g.neighbors(v)) {
                    if (state[w] == 2)
                        return false;
                    forced[w] = 1;
                }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (forced[v])
                ++in_cover;
            else if (state[v] == 0)
                rest.push_back(v);
        }
        Graph h = induced_subgraph(g, VertexSet(rest));
        int cover_rest = h.vertex_count() - max_independent_set_size(h, limits);
        return in_cover + cover_rest <= target;
    };
    for (Vertex v = 0; v < n; ++v) {
        state[v] = 1;
        if (!feasible())
            state[v] = 2;
    }
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < n; ++v)
        if (state[v] == 1)
            cover.push_back(v);
    if (static_cast<int>(cover.size()) != target)
        throw InvariantFailure("vertex cover canonicalisation produced the wrong size");
    return {target, VertexSet(std::move(cover))};
}

int min_vertex_cover_size(const Graph& g, const SolverLimits& limits) {
    return g.vertex_count() - max_independent_set_size(g, limits);
}

std::optional<std::vector<bool>> cnf_satisfiable(const CnfFormula& f, const SolverLimits& limits) {
    check_formula(f);
    if (f.variable_count > limits.cnf_max_variables)
        throw SizeGuardError("cnf_satisfiable refuses " + std::to_string(f.variable_count) +
                             " variables (ceiling " + std::to_string(limits.cnf_max_variables) + ")");
    const std::uint64_t total = std::uint64_t{1} << f.variable_count;
    std::vector<bool> assignment(static_cast<std::size_t>(f.variable_count) + 1, false);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int v = 1; v <= f.variable_count; ++v)
            assignment[v] = (mask >> (v - 1)) & 1U;
        if (evaluate(f, assignment))
            return assignment;
    }
    return std::nullopt;
}

}  // namespace crosscomp
