/*
 * Copyright 2026 The parsep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "parsep/solvers.hpp"

#include "parsep/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace parsep {

// ---------------------------------------------------------------------------
// Safety games

SafetyGame::SafetyGame(std::vector<Player> owner, const std::vector<std::vector<int>>& successors,
                       std::vector<char> unsafe)
    : owner_(std::move(owner)), unsafe_(std::move(unsafe))
{
    const int n = size();
    if (static_cast<int>(successors.size()) != n || static_cast<int>(unsafe_.size()) != n) {
        throw std::invalid_argument("safety game arrays differ in size");
    }
    std::vector<std::size_t> indeg(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (successors[v].empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " has no successor");
        for (int w : successors[v]) {
            if (w < 0 || w >= n) throw std::invalid_argument("successor out of range");
            ++indeg[w + 1];
        }
        succ_.insert(succ_.end(), successors[v].begin(), successors[v].end());
        succ_off_.push_back(succ_.size());
    }
    for (int v = 0; v < n; ++v) indeg[v + 1] += indeg[v];
    pred_off_ = indeg;
    pred_.resize(succ_.size());
    for (int v = 0; v < n; ++v)
        for (int w : successors[v]) pred_[indeg[w]++] = v;
}

namespace {

/// The explicit safety game seen through the interface attract_unsafe needs.
struct ExplicitArena
{
    const SafetyGame& game;

    std::size_t size() const { return static_cast<std::size_t>(game.size()); }
    Player owner(std::size_t x) const { return game.owner(static_cast<int>(x)); }
    bool unsafe(std::size_t x) const { return game.unsafe(static_cast<int>(x)); }
    std::size_t out_degree(std::size_t x) const { return game.successors(static_cast<int>(x)).size(); }
    template <class F>
    void for_each_pred(std::size_t x, F&& f) const
    {
        for (int y : game.predecessors(static_cast<int>(x))) f(static_cast<std::size_t>(y));
    }
};

/// G x A for deterministic A, without materializing edges.
class DetProductArena
{
public:
    DetProductArena(const ParityGame& game, const SafetyAutomaton& a) : g_(game), a_(a), q_(a.size())
    {
        const int d = a.alphabet();
        inv_off_.assign(static_cast<std::size_t>(d) * q_ + 1, 0);
        for (int q = 0; q < q_; ++q)
            for (int p = 1; p <= d; ++p) ++inv_off_[slot(p, a.step(q, p)) + 1];
        for (std::size_t k = 1; k < inv_off_.size(); ++k) inv_off_[k] += inv_off_[k - 1];
        inv_.resize(inv_off_.back());
        auto fill = inv_off_;
        for (int q = 0; q < q_; ++q)
            for (int p = 1; p <= d; ++p) inv_[fill[slot(p, a.step(q, p))]++] = q;
    }

    std::size_t size() const { return static_cast<std::size_t>(g_.size()) * q_; }
    Player owner(std::size_t x) const { return g_.owner(static_cast<int>(x / q_)); }
    bool unsafe(std::size_t x) const { return a_.is_rejecting(static_cast<int>(x % q_)); }
    std::size_t out_degree(std::size_t x) const { return g_.out(static_cast<int>(x / q_)).size(); }
    template <class F>
    void for_each_pred(std::size_t x, F&& f) const
    {
        const int u = static_cast<int>(x / q_), q2 = static_cast<int>(x % q_);
        for (int e : g_.in(u)) {
            const Edge& edge = g_.edge(e);
            std::size_t base = static_cast<std::size_t>(edge.src) * q_;
            std::size_t k = slot(edge.priority, q2);
            for (std::size_t i = inv_off_[k]; i < inv_off_[k + 1]; ++i) f(base + inv_[i]);
        }
    }

private:
    std::size_t slot(int p, int q) const { return static_cast<std::size_t>(p - 1) * q_ + q; }

    const ParityGame& g_;
    const SafetyAutomaton& a_;
    int q_;
    std::vector<std::uint32_t> inv_off_;
    std::vector<int> inv_;
};

/// Odd's attractor to the unsafe vertices; everything outside is safe for Even.
template <class Arena>
std::vector<char>
attract_unsafe(const Arena& arena)
{
    const std::size_t n = arena.size();
    std::vector<char> attr(n, 0);
    std::vector<std::uint32_t> hits(n, 0);
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        if (arena.unsafe(x)) {
            attr[x] = 1;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        std::size_t y = queue.back();
        queue.pop_back();
        arena.for_each_pred(y, [&](std::size_t x) {
            if (attr[x]) return;
            if (arena.owner(x) == Player::Odd || ++hits[x] == arena.out_degree(x)) {
                attr[x] = 1;
                queue.push_back(x);
            }
        });
    }
    return attr;
}

} // namespace

ChainedProduct
chained_product(const ParityGame& game, const SafetyAutomaton& a)
{
    if (a.alphabet() < game.d()) {
        throw std::invalid_argument("alphabet mismatch: automaton reads 1.." + std::to_string(a.alphabet()) +
                                    " but the game has priorities up to " + std::to_string(game.d()));
    }
    ChainedProduct out;
    auto& layout = out.layout;
    layout.game_vertices = game.size();
    layout.automaton_states = a.size();
    const int q_count = a.size();
    const std::uint64_t base = static_cast<std::uint64_t>(game.size()) * q_count;

    std::map<std::pair<int, int>, int> choice_id;
    if (!a.deterministic()) {
        for (const auto& e : game.edges()) choice_id.emplace(std::make_pair(e.dst, e.priority), 0);
        for (auto& [key, id] : choice_id) {
            id = static_cast<int>(layout.choice_points.size());
            layout.choice_points.push_back(key);
        }
    }
    const std::uint64_t total = base + static_cast<std::uint64_t>(layout.choice_points.size()) * q_count;
    if (total > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        throw CapExceeded("chained product has " + std::to_string(total) + " vertices");
    }

    std::vector<Player> owner(total, Player::Even);
    std::vector<std::vector<int>> succ(total);
    std::vector<char> unsafe(total, 0);
    for (int v = 0; v < game.size(); ++v) {
        for (int q = 0; q < q_count; ++q) {
            const int x = layout.vertex(v, q);
            owner[x] = game.owner(v);
            unsafe[x] = a.is_rejecting(q);
            for (int e : game.out(v)) {
                const Edge& edge = game.edge(e);
                if (a.deterministic()) {
                    succ[x].push_back(layout.vertex(edge.dst, a.step(q, edge.priority)));
                } else {
                    int k = choice_id.at({edge.dst, edge.priority});
                    succ[x].push_back(static_cast<int>(base) + k * q_count + q);
                }
            }
        }
    }
    for (int k = 0; k < static_cast<int>(layout.choice_points.size()); ++k) {
        auto [u, p] = layout.choice_points[k];
        for (int q = 0; q < q_count; ++q) {
            const int x = static_cast<int>(base) + k * q_count + q;
            unsafe[x] = a.is_rejecting(q);
            for (int q2 : a.successors(q, p)) succ[x].push_back(layout.vertex(u, q2));
        }
    }
    out.game = SafetyGame(std::move(owner), succ, std::move(unsafe));
    return out;
}

SafetySolution
solve_safety(const SafetyGame& game)
{
    auto attr = attract_unsafe(ExplicitArena{game});
    SafetySolution sol;
    sol.safe.resize(game.size());
    sol.choice.assign(game.size(), -1);
    for (int v = 0; v < game.size(); ++v) {
        sol.safe[v] = !attr[v];
        if (!sol.safe[v] || game.owner(v) != Player::Even) continue;
        auto succ = game.successors(v);
        for (std::size_t i = 0; i < succ.size(); ++i) {
            if (!attr[succ[i]]) {
                sol.choice[v] = static_cast<int>(i);
                break;
            }
        }
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Separation approach

std::vector<char>
Solution::region(Player p) const
{
    std::vector<char> r(winner.size());
    for (std::size_t v = 0; v < winner.size(); ++v) r[v] = winner[v] == p;
    return r;
}

Solution
solve_by_separation(const ParityGame& game, const SafetyAutomaton& a, SeparationStats* stats)
{
    if (a.alphabet() < game.d()) {
        throw std::invalid_argument("alphabet mismatch: automaton reads 1.." + std::to_string(a.alphabet()) +
                                    " but the game has priorities up to " + std::to_string(game.d()));
    }
    const int n = game.size();
    const int q_count = a.size();
    const std::size_t base = static_cast<std::size_t>(n) * q_count;

    // safe[(v, q)] and resolve(e, q): the memory after edge e (-1 if Even cannot stay safe)
    std::vector<char> safe(base);
    std::function<int(int, int)> resolve;
    ChainedProduct cp;
    SafetySolution ssol;
    if (a.deterministic()) {
        DetProductArena arena(game, a);
        auto attr = attract_unsafe(arena);
        for (std::size_t x = 0; x < base; ++x) safe[x] = !attr[x];
        resolve = [&](int e, int q) {
            const Edge& edge = game.edge(e);
            int q2 = a.step(q, edge.priority);
            return safe[static_cast<std::size_t>(edge.dst) * q_count + q2] ? q2 : -1;
        };
        if (stats) {
            stats->product_states = base;
            stats->product_edges = static_cast<std::uint64_t>(game.edges().size()) * q_count;
        }
    } else {
        cp = chained_product(game, a);
        ssol = solve_safety(cp.game);
        for (std::size_t x = 0; x < base; ++x) safe[x] = ssol.safe[x];
        std::map<std::pair<int, int>, int> choice_id;
        for (int k = 0; k < static_cast<int>(cp.layout.choice_points.size()); ++k) {
            choice_id.emplace(cp.layout.choice_points[k], k);
        }
        resolve = [&, choice_id](int e, int q) {
            const Edge& edge = game.edge(e);
            int y = static_cast<int>(base) + choice_id.at({edge.dst, edge.priority}) * q_count + q;
            if (!ssol.safe[y]) return -1;
            return cp.game.successors(y)[ssol.choice[y]] % q_count;
        };
        if (stats) {
            stats->product_states = static_cast<std::uint64_t>(cp.game.size());
            stats->product_edges = cp.game.edge_count();
        }
    }

    Solution sol;
    sol.winner.resize(n);
    sol.strategy.assign(n, kNoEdge);
    MemoryStrategy mem;
    mem.memory_size = q_count;
    mem.initial_memory = a.initial();

    std::vector<char> seen(base, 0);
    std::vector<std::size_t> queue;
    for (int v = 0; v < n; ++v) {
        std::size_t x = static_cast<std::size_t>(v) * q_count + a.initial();
        sol.winner[v] = safe[x] ? Player::Even : Player::Odd;
        if (safe[x]) {
            seen[x] = 1;
            queue.push_back(x);
        }
    }
    while (!queue.empty()) {
        std::size_t x = queue.back();
        queue.pop_back();
        const int v = static_cast<int>(x / q_count), q = static_cast<int>(x % q_count);
        bool moved = false;
        for (int e : game.out(v)) {
            int q2 = resolve(e, q);
            if (game.owner(v) == Player::Even && q2 < 0) continue;
            if (q2 < 0) throw std::logic_error("safe Odd vertex with an unsafe move");
            mem.update[mem.key(e, q)] = q2;
            std::size_t y = static_cast<std::size_t>(game.edge(e).dst) * q_count + q2;
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
            if (game.owner(v) == Player::Even) {
                mem.move[mem.key(v, q)] = e;
                moved = true;
                break;
            }
        }
        if (game.owner(v) == Player::Even && !moved) throw std::logic_error("safe Even vertex without a safe move");
    }
    sol.even_memory = std::move(mem);
    complete_strategies(game, sol);
    return sol;
}

// ---------------------------------------------------------------------------
// Progress measures

namespace {

/// Leaf-rank bounds of truncations: lo/hi of the ancestor at each length.
struct TruncationTable
{
    int leaves = 0;
    int height = 0;
    std::vector<int> lo, hi;  // [len * leaves + rank]

    explicit TruncationTable(const OrderedTree& tree) : leaves(tree.leaf_count()), height(tree.height())
    {
        lo.resize(static_cast<std::size_t>(height + 1) * leaves);
        hi.resize(lo.size());
        for (int r = 0; r < leaves; ++r) {
            int v = tree.leaf_node(r);
            for (int len = height; len >= 0; --len) {
                auto [l, h] = tree.leaf_range(v);
                lo[static_cast<std::size_t>(len) * leaves + r] = l;
                hi[static_cast<std::size_t>(len) * leaves + r] = h;
                if (len > 0) v = tree.parent(v);
            }
        }
    }

    /// Smallest label of the source that satisfies the progress condition towards `target`.
    int required(int p, int d, int target) const
    {
        if (target >= leaves) return leaves;
        std::size_t k = static_cast<std::size_t>(truncation_length(p, d)) * leaves + target;
        return p % 2 == 0 ? lo[k] : hi[k];
    }
};

void
check_tree_for_game(const ParityGame& game, const OrderedTree& tree)
{
    if (tree.height() != game.d() / 2 || !tree.full_depth()) {
        throw std::invalid_argument("tree must have every leaf at depth d/2 = " + std::to_string(game.d() / 2));
    }
}

} // namespace

LiftResult
lift_solve(const ParityGame& game, const OrderedTree& tree, const LiftObserver& observer)
{
    check_tree_for_game(game, tree);
    const int n = game.size();
    const int d = game.d();
    TruncationTable table(tree);
    const int top = table.leaves;

    LiftResult res;
    res.top = top;
    auto& mu = res.labelling;
    mu.assign(n, 0);

    auto lift_value = [&](int v) {
        bool even = game.owner(v) == Player::Even;
        int best = even ? top : 0;
        for (int e : game.out(v)) {
            const Edge& edge = game.edge(e);
            int r = table.required(edge.priority, d, mu[edge.dst]);
            best = even ? std::min(best, r) : std::max(best, r);
        }
        return best;
    };

    std::vector<int> work(n);
    std::vector<char> queued(n, 1);
    for (int v = 0; v < n; ++v) work[v] = n - 1 - v;
    while (!work.empty()) {
        int v = work.back();
        work.pop_back();
        queued[v] = 0;
        if (mu[v] == top) continue;
        int value = lift_value(v);
        if (value <= mu[v]) continue;
        if (observer) observer(v, mu[v], value);
        mu[v] = value;
        ++res.lifts;
        for (int e : game.in(v)) {
            int u = game.edge(e).src;
            if (!queued[u] && mu[u] != top) {
                queued[u] = 1;
                work.push_back(u);
            }
        }
    }

    auto& sol = res.solution;
    sol.winner.resize(n);
    sol.strategy.assign(n, kNoEdge);
    for (int v = 0; v < n; ++v) {
        sol.winner[v] = mu[v] < top ? Player::Even : Player::Odd;
        if (mu[v] == top || game.owner(v) != Player::Even) continue;
        for (int e : game.out(v)) {
            const Edge& edge = game.edge(e);
            if (table.required(edge.priority, d, mu[edge.dst]) <= mu[v]) {
                sol.strategy[v] = e;
                break;
            }
        }
    }
    return res;
}

bool
check_progress_measure(const ParityGame& game, const OrderedTree& tree, std::span<const int> sigma,
                       std::span<const int> mu)
{
    check_tree_for_game(game, tree);
    if (static_cast<int>(mu.size()) != game.size()) throw std::invalid_argument("labelling size mismatch");
    TruncationTable table(tree);
    for (int v = 0; v < game.size(); ++v) {
        if (mu[v] < 0 || mu[v] >= table.leaves) throw std::invalid_argument("labelling is not total");
    }
    GameGraph sub = strategy_subgraph(game, sigma);
    for (const auto& e : sub.edges()) {
        if (table.required(e.priority, game.d(), mu[e.dst]) > mu[e.src]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Zielonka

namespace {

/**
 * Edge-split arena: vertex v < n is an original vertex of priority 0, vertex
 * n + e stands for edge e and carries its priority.
 */
class Zielonka
{
public:
    explicit Zielonka(const ParityGame& game) : game_(game), n_(game.size()), total_(n_ + game.edges().size())
    {
        strat_.assign(total_, -1);
        win_.assign(total_, Player::Even);
    }

    Solution run()
    {
        std::vector<int> all(total_);
        for (int x = 0; x < total_; ++x) all[x] = x;
        solve(all);
        Solution sol;
        sol.winner.assign(win_.begin(), win_.begin() + n_);
        sol.strategy.assign(n_, kNoEdge);
        for (int v = 0; v < n_; ++v)
            if (win_[v] == game_.owner(v)) sol.strategy[v] = strat_[v] - n_;
        return sol;
    }

private:
    Player owner(int x) const { return x < n_ ? game_.owner(x) : Player::Even; }
    int priority(int x) const { return x < n_ ? 0 : game_.edge(x - n_).priority; }

    template <class F>
    void for_succ(int x, F&& f) const
    {
        if (x < n_) {
            for (int e : game_.out(x)) f(n_ + e);
        } else {
            f(game_.edge(x - n_).dst);
        }
    }
    template <class F>
    void for_pred(int x, F&& f) const
    {
        if (x < n_) {
            for (int e : game_.in(x)) f(n_ + e);
        } else {
            f(game_.edge(x - n_).src);
        }
    }

    /// Attractor for `player` to `target` inside the subgame `in`; sets strategies of attracted vertices.
    std::vector<int> attract(const std::vector<char>& in, const std::vector<int>& target, Player player)
    {
        std::vector<char> attr(total_, 0);
        std::vector<int> count(total_, -1);
        std::vector<int> out = target;
        for (int x : target) attr[x] = 1;
        for (std::size_t i = 0; i < out.size(); ++i) {
            int y = out[i];
            for_pred(y, [&](int x) {
                if (!in[x] || attr[x]) return;
                if (owner(x) == player) {
                    strat_[x] = y;
                } else {
                    if (count[x] < 0) {
                        count[x] = 0;
                        for_succ(x, [&](int z) { count[x] += in[z]; });
                    }
                    if (--count[x] > 0) return;
                }
                attr[x] = 1;
                out.push_back(x);
            });
        }
        return out;
    }

    std::vector<char> mask(const std::vector<int>& verts) const
    {
        std::vector<char> m(total_, 0);
        for (int x : verts) m[x] = 1;
        return m;
    }

    void solve(const std::vector<int>& verts)
    {
        if (verts.empty()) return;
        const auto in = mask(verts);
        int p = 0;
        for (int x : verts) p = std::max(p, priority(x));
        const Player i = parity_of(p);
        std::vector<int> top;
        for (int x : verts)
            if (priority(x) == p) top.push_back(x);

        auto a = attract(in, top, i);
        auto in_a = mask(a);
        std::vector<int> rest;
        for (int x : verts)
            if (!in_a[x]) rest.push_back(x);
        solve(rest);

        std::vector<int> lost;  // won by the opponent inside rest
        for (int x : rest)
            if (win_[x] != i) lost.push_back(x);
        if (lost.empty()) {
            for (int x : a) win_[x] = i;
            // choices left in top vertices by deeper calls may leave the subgame
            for (int x : top) {
                if (owner(x) != i) continue;
                strat_[x] = -1;
                for_succ(x, [&](int y) {
                    if (in[y] && strat_[x] < 0) strat_[x] = y;
                });
            }
            return;
        }
        auto b = attract(in, lost, opponent(i));
        auto in_b = mask(b);
        for (int x : b) win_[x] = opponent(i);
        std::vector<int> remaining;
        for (int x : verts)
            if (!in_b[x]) remaining.push_back(x);
        solve(remaining);
    }

    const ParityGame& game_;
    int n_;
    int total_;
    std::vector<int> strat_;
    std::vector<Player> win_;
};

} // namespace

Solution
zielonka(const ParityGame& game)
{
    return Zielonka(game).run();
}

void
complete_strategies(const ParityGame& game, Solution& solution)
{
    const int n = game.size();
    for (Player p : {Player::Even, Player::Odd}) {
        if (p == Player::Even && solution.even_memory) continue;
        bool missing = false;
        for (int v = 0; v < n; ++v)
            if (solution.winner[v] == p && game.owner(v) == p && solution.strategy[v] == kNoEdge) missing = true;
        if (!missing) continue;

        std::vector<int> local(n, -1), global;
        for (int v = 0; v < n; ++v) {
            if (solution.winner[v] == p) {
                local[v] = static_cast<int>(global.size());
                global.push_back(v);
            }
        }
        std::vector<Player> owner;
        std::vector<Edge> edges;
        std::vector<int> edge_id;
        for (int v : global) owner.push_back(game.owner(v));
        for (int e = 0; e < static_cast<int>(game.edges().size()); ++e) {
            const Edge& edge = game.edge(e);
            if (local[edge.src] >= 0 && local[edge.dst] >= 0) {
                edges.push_back({local[edge.src], local[edge.dst], edge.priority});
                edge_id.push_back(e);
            }
        }
        ParityGame sub(std::move(owner), std::move(edges), game.d());
        Solution subsol = zielonka(sub);
        for (int i = 0; i < sub.size(); ++i) {
            if (subsol.winner[i] != p) throw std::logic_error("winning region is not won by its player");
            if (sub.owner(i) == p) solution.strategy[global[i]] = edge_id[subsol.strategy[i]];
        }
    }
}

// ---------------------------------------------------------------------------
// Verification

namespace {

bool
verify_positional_side(const ParityGame& game, const Solution& sol, Player p)
{
    const int n = game.size();
    if (static_cast<int>(sol.winner.size()) != n || static_cast<int>(sol.strategy.size()) != n) return false;
    std::vector<int> local(n, -1);
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (sol.winner[v] == p) local[v] = count++;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        if (local[v] < 0) continue;
        if (game.owner(v) == p) {
            int e = sol.strategy[v];
            if (e < 0 || e >= static_cast<int>(game.edges().size()) || game.edge(e).src != v) return false;
            const Edge& edge = game.edge(e);
            if (local[edge.dst] < 0) return false;
            edges.push_back({local[v], local[edge.dst], edge.priority});
        } else {
            for (int e : game.out(v)) {
                const Edge& edge = game.edge(e);
                if (local[edge.dst] < 0) return false;
                edges.push_back({local[v], local[edge.dst], edge.priority});
            }
        }
    }
    GameGraph sub(count, std::move(edges), game.d());
    return p == Player::Even ? is_even_graph(sub) : is_odd_graph(sub);
}

} // namespace

bool
verify_memory_strategy(const ParityGame& game, std::span<const char> region, const MemoryStrategy& strategy)
{
    const int n = game.size();
    const int mem = strategy.memory_size;
    if (static_cast<int>(region.size()) != n || mem < 1) return false;
    if (strategy.initial_memory < 0 || strategy.initial_memory >= mem) return false;

    std::unordered_map<std::uint64_t, int> id;
    std::vector<std::pair<int, int>> configs;
    auto visit = [&](int v, int m) {
        auto [it, fresh] = id.emplace(static_cast<std::uint64_t>(v) * mem + m, static_cast<int>(configs.size()));
        if (fresh) configs.emplace_back(v, m);
        return it->second;
    };
    for (int v = 0; v < n; ++v)
        if (region[v]) visit(v, strategy.initial_memory);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        auto [v, m] = configs[i];
        if (!region[v]) return false;
        auto follow = [&](int e) {
            auto it = strategy.update.find(strategy.key(e, m));
            if (it == strategy.update.end() || it->second < 0 || it->second >= mem) return false;
            const Edge& edge = game.edge(e);
            int target = visit(edge.dst, it->second);
            edges.push_back({static_cast<int>(i), target, edge.priority});
            return true;
        };
        if (game.owner(v) == Player::Even) {
            auto it = strategy.move.find(strategy.key(v, m));
            if (it == strategy.move.end()) return false;
            int e = it->second;
            if (e < 0 || e >= static_cast<int>(game.edges().size()) || game.edge(e).src != v) return false;
            if (!follow(e)) return false;
        } else {
            for (int e : game.out(v))
                if (!follow(e)) return false;
        }
    }
    GameGraph plays(static_cast<int>(configs.size()), std::move(edges), game.d());
    return is_even_graph(plays);
}

bool
verify_even_side(const ParityGame& game, const Solution& solution)
{
    if (!solution.even_memory) return verify_positional_side(game, solution, Player::Even);
    if (static_cast<int>(solution.winner.size()) != game.size()) return false;
    return verify_memory_strategy(game, solution.region(Player::Even), *solution.even_memory);
}

bool
verify_odd_side(const ParityGame& game, const Solution& solution)
{
    return verify_positional_side(game, solution, Player::Odd);
}

bool
verify_solution(const ParityGame& game, const Solution& solution)
{
    return verify_even_side(game, solution) && verify_odd_side(game, solution);
}

} // namespace parsep
