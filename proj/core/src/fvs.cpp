// Exact (weighted) feedback vertex set by shortest-cycle branching.
//
// The search runs on a multigraph with at most 64 vertices: `adj` holds every
// neighbour, `dbl` marks neighbours joined by a double edge (a 2-cycle), and
// `loop` marks self-loops. Degree-2 bypass can create both.

#include <array>
#include <bit>
#include <limits>
#include <string>

#include "crosscomp/errors.hpp"
#include "crosscomp/oracles.hpp"

namespace crosscomp {

namespace {

using Mask = std::uint64_t;
constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

Mask bit(int v) { return Mask{1} << v; }

struct State {
    int n = 0;
    Mask alive = 0;
    Mask undeletable = 0;
    Mask loop = 0;
    std::array<Mask, 64> adj{};
    std::array<Mask, 64> dbl{};

    int degree(int v) const { return std::popcount(adj[v] & alive) + std::popcount(dbl[v] & alive); }

    void drop(int v) {
        alive &= ~bit(v);
        loop &= ~bit(v);
        for (Mask m = adj[v]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            adj[u] &= ~bit(v);
            dbl[u] &= ~bit(v);
        }
        adj[v] = 0;
        dbl[v] = 0;
    }

    void add_edge(int u, int x) {
        if (adj[u] & bit(x)) {
            dbl[u] |= bit(x);
            dbl[x] |= bit(u);
        } else {
            adj[u] |= bit(x);
            adj[x] |= bit(u);
        }
    }
};

// Shortest cycle as a vertex list; empty when the multigraph is a forest.
std::vector<int> shortest_cycle(const State& s) {
    if (s.loop & s.alive)
        return {std::countr_zero(s.loop & s.alive)};
    for (Mask m = s.alive; m; m &= m - 1) {
        int u = std::countr_zero(m);
        Mask d = s.dbl[u] & s.alive;
        if (d)
            return {u, std::countr_zero(d)};
    }
    int best_len = std::numeric_limits<int>::max();
    std::vector<int> best;
    std::array<int, 64> dist{};
    std::array<int, 64> parent{};
    std::array<int, 64> queue{};
    for (Mask roots = s.alive; roots; roots &= roots - 1) {
        int root = std::countr_zero(roots);
        dist.fill(-1);
        dist[root] = 0;
        parent[root] = -1;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] >= best_len)
                break;
            for (Mask m = s.adj[u] & s.alive; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (len < best_len) {
                        best_len = len;
                        std::vector<int> left, right;
                        for (int x = u; x != -1; x = parent[x])
                            left.push_back(x);
                        for (int x = w; x != -1; x = parent[x])
                            right.push_back(x);
                        right.pop_back();  // root already in left
                        best.assign(left.rbegin(), left.rend());
                        best.insert(best.end(), right.begin(), right.end());
                    }
                }
            }
        }
    }
    return best;
}

class FvsEngine {
public:
    FvsEngine(const WeightFn& weights, bool first_only) : weights_(weights), first_only_(first_only) {}

    /// Searches for a solution of cost <= limit; keeps improving unless first_only.
    void run(State s, std::int64_t limit) {
        limit_ = limit;
        std::vector<int> chosen;
        search(s, 0, chosen);
    }

    bool found() const { return found_; }
    std::int64_t best_cost() const { return best_cost_; }
    const std::vector<int>& best_set() const { return best_set_; }

private:
    bool remove_forced(State& s, int v, std::int64_t& cost, std::vector<int>& chosen) const {
        if (s.undeletable & bit(v))
            return false;
        cost += weights_[v];
        chosen.push_back(v);
        s.drop(v);
        return true;
    }

    // Applies the reduction rules to a fixpoint. False means infeasible.
    bool reduce(State& s, std::int64_t& cost, std::vector<int>& chosen) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Mask m = s.alive; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (!(s.alive & bit(v)))
                    continue;
                if (s.loop & bit(v)) {
                    if (!remove_forced(s, v, cost, chosen))
                        return false;
                    changed = true;
                    continue;
                }
                const bool v_fixed = s.undeletable & bit(v);
                Mask d = s.dbl[v] & s.alive;
                for (; d; d &= d - 1) {
                    int u = std::countr_zero(d);
                    const bool u_fixed = s.undeletable & bit(u);
                    if (v_fixed && u_fixed)
                        return false;
                    if (v_fixed) {
                        remove_forced(s, u, cost, chosen);
                        changed = true;
                        break;
                    }
                }
                if (changed)
                    continue;
                int deg = s.degree(v);
                if (deg <= 1) {
                    s.drop(v);
                    changed = true;
                    continue;
                }
                if (deg != 2)
                    continue;
                auto cheap = [&](int u) { return !(s.undeletable & bit(u)) && weights_[u] <= weights_[v]; };
                Mask nb = s.adj[v] & s.alive;
                if (std::popcount(nb) == 1) {
                    int u = std::countr_zero(nb);
                    if (v_fixed || cheap(u)) {
                        s.drop(v);
                        s.loop |= bit(u);
                        changed = true;
                    }
                } else {
                    int u = std::countr_zero(nb);
                    int x = std::countr_zero(nb & (nb - 1));
                    if (v_fixed || cheap(u) || cheap(x)) {
                        s.drop(v);
                        s.add_edge(u, x);
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    // Weight of a greedy packing of vertex-disjoint cycles.
    std::int64_t lower_bound(State s) const {
        std::int64_t total = 0;
        while (true) {
            auto cycle = shortest_cycle(s);
            if (cycle.empty())
                return total;
            std::int64_t cheapest = kInfinite;
            for (int v : cycle)
                if (!(s.undeletable & bit(v)))
                    cheapest = std::min(cheapest, weights_[v]);
            if (cheapest == kInfinite)
                return kInfinite;
            total += cheapest;
            for (int v : cycle)
                s.drop(v);
            bool pruned = true;
            while (pruned) {
                pruned = false;
                for (Mask m = s.alive; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    if (!(s.loop & bit(v)) && s.degree(v) <= 1) {
                        s.drop(v);
                        pruned = true;
                    }
                }
            }
        }
    }

    void search(State s, std::int64_t cost, std::vector<int> chosen) {
        if (found_ && first_only_)
            return;
        if (!reduce(s, cost, chosen))
            return;
        if (cost > limit_)
            return;
        std::int64_t lb = lower_bound(s);
        if (lb >= kInfinite || cost + lb > limit_)
            return;
        auto cycle = shortest_cycle(s);
        if (cycle.empty()) {
            found_ = true;
            best_cost_ = cost;
            best_set_ = chosen;
            limit_ = cost - 1;
            return;
        }
        Mask earlier = 0;
        for (int v : cycle) {
            if (s.undeletable & bit(v))
                continue;
            State next = s;
            next.undeletable |= earlier;
            next.drop(v);
            chosen.push_back(v);
            search(next, cost + weights_[v], chosen);
            chosen.pop_back();
            if (found_ && first_only_)
                return;
            earlier |= bit(v);
        }
    }

    const WeightFn& weights_;
    bool first_only_;
    std::int64_t limit_ = 0;
    bool found_ = false;
    std::int64_t best_cost_ = kInfinite;
    std::vector<int> best_set_;
};

State make_state(const Graph& g) {
    State s;
    s.n = g.vertex_count();
    s.alive = s.n == 64 ? ~Mask{0} : (bit(s.n) - 1);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= bit(v);
        s.adj[v] |= bit(u);
    }
    return s;
}

void check_inputs(const Graph& g, const WeightFn& weights, const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.fvs_max_vertices || n > 64)
        throw SizeGuardError("feedback vertex set solver refuses " + std::to_string(n) + " vertices (ceiling " +
                             std::to_string(std::min(limits.fvs_max_vertices, 64)) + ")");
    if (static_cast<int>(weights.size()) != n)
        throw PreconditionError("weight function must cover every vertex");
    for (auto w : weights)
        if (w <= 0)
            throw PreconditionError("vertex weights must be positive");
}

std::int64_t total_weight(const WeightFn& weights) {
    std::int64_t sum = 0;
    for (auto w : weights)
        sum += w;
    return sum;
}

// Is there a feedback vertex set of weight <= budget containing `forced` and
// avoiding `forbidden`?
bool feasible(const Graph& g, const WeightFn& weights, Mask forced, Mask forbidden, std::int64_t budget) {
    State s = make_state(g);
    std::int64_t cost = 0;
    for (Mask m = forced; m; m &= m - 1) {
        int v = std::countr_zero(m);
        cost += weights[v];
        s.drop(v);
    }
    if (cost > budget)
        return false;
    s.undeletable = forbidden;
    FvsEngine engine(weights, true);
    engine.run(s, budget - cost);
    return engine.found();
}

FvsOutcome solve(const Graph& g, const WeightFn& weights, std::optional<std::int64_t> budget,
                 const SolverLimits& limits) {
    check_inputs(g, weights, limits);
    const std::int64_t limit = budget ? *budget : total_weight(weights);
    if (limit < 0)
        return {std::nullopt, {}};
    FvsEngine engine(weights, false);
    engine.run(make_state(g), limit);
    if (!engine.found()) {
        if (!budget)
            throw InvariantFailure("feedback vertex set search found no solution without a budget");
        return {std::nullopt, {}};
    }
    const std::int64_t optimum = engine.best_cost();

    // Lexicographically smallest optimum: take each vertex in id order if an
    // optimal solution containing the current choice still exists.
    Mask forced = 0, forbidden = 0;
    std::int64_t spent = 0;
    const int n = g.vertex_count();
    for (int v = 0; v < n && spent < optimum; ++v) {
        if (spent + weights[v] <= optimum && feasible(g, weights, forced | bit(v), forbidden, optimum)) {
            forced |= bit(v);
            spent += weights[v];
        } else {
            forbidden |= bit(v);
        }
    }
    std::vector<Vertex> witness;
    for (Mask m = forced; m; m &= m - 1)
        witness.push_back(std::countr_zero(m));
    VertexSet set(std::move(witness));
    if (spent != optimum || !is_forest(remove_vertices(g, set)))
        throw InvariantFailure("feedback vertex set canonicalisation failed");
    return {optimum, std::move(set)};
}

}  // namespace

FvsOutcome min_fvs_size(const Graph& g, std::optional<std::int64_t> budget, const SolverLimits& limits) {
    return solve(g, WeightFn(static_cast<std::size_t>(g.vertex_count()), 1), budget, limits);
}

FvsOutcome min_weight_fvs(const Graph& g, const WeightFn& weights, std::optional<std::int64_t> budget,
                          const SolverLimits& limits) {
    return solve(g, weights, budget, limits);
}

bool has_fvs_within(const Graph& g, const WeightFn& weights, std::int64_t budget, const SolverLimits& limits) {
    check_inputs(g, weights, limits);
    if (budget < 0)
        return false;
    return feasible(g, weights, 0, 0, budget);
}

}  // namespace crosscomp
