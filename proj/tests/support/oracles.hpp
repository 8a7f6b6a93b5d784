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

#pragma once

// Brute-force reference implementations used as independent oracles.

#include "parsep/automata.hpp"
#include "parsep/game.hpp"
#include "parsep/solvers.hpp"
#include "parsep/trees.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace parsep::oracle {

/// Tries every order-preserving injection of t's children into T's children.
inline bool
naive_embeds(const TreeShape& t, const TreeShape& T)
{
    const auto& a = t.children;
    const auto& b = T.children;
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t j) {
        if (i == a.size()) return true;
        for (std::size_t k = j; k < b.size(); ++k)
            if (naive_embeds(a[i], b[k]) && place(i + 1, k + 1)) return true;
        return false;
    };
    return place(0, 0);
}

/// Every tree with exactly `leaves` leaves, all at depth `height`.
inline std::vector<TreeShape>
all_trees(int leaves, int height)
{
    if (height == 0) return leaves == 1 ? std::vector<TreeShape>{TreeShape{}} : std::vector<TreeShape>{};
    std::vector<TreeShape> out;
    // children lists: first child takes k leaves, the rest recurse on the remaining leaves
    std::function<void(int, std::vector<TreeShape>&)> build = [&](int left, std::vector<TreeShape>& prefix) {
        if (left == 0) {
            if (!prefix.empty()) out.push_back(TreeShape{prefix});
            return;
        }
        for (int k = 1; k <= left; ++k) {
            for (const auto& c : all_trees(k, height - 1)) {
                prefix.push_back(c);
                build(left - k, prefix);
                prefix.pop_back();
            }
        }
    };
    std::vector<TreeShape> prefix;
    build(leaves, prefix);
    return out;
}

/// Embeds every tree with <= l leaves of height exactly h (shorter trees pad to depth h).
inline bool
naive_universal(const TreeShape& T, int l, int h)
{
    if (T.height() != h) return false;
    for (int k = 1; k <= l; ++k)
        for (const auto& t : all_trees(k, h))
            if (!naive_embeds(t, T)) return false;
    return true;
}

/// Smallest universal tree of height h by trying every tree of increasing size.
inline int
naive_min_universal(int l, int h)
{
    for (int size = 1;; ++size)
        for (const auto& T : all_trees(size, h))
            if (naive_universal(T, l, h)) return size;
}

/// Full-depth leaf direction sequences in lexicographic order.
inline std::vector<std::vector<int>>
leaf_paths(const TreeShape& t)
{
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::function<void(const TreeShape&)> walk = [&](const TreeShape& x) {
        if (x.is_leaf()) {
            out.push_back(path);
            return;
        }
        for (std::size_t i = 0; i < x.children.size(); ++i) {
            path.push_back(static_cast<int>(i));
            walk(x.children[i]);
            path.pop_back();
        }
    };
    walk(t);
    return out;
}

/// Linear-scan leaf query on explicit leaf paths.
inline std::optional<int>
scan_leaf_query(const std::vector<std::vector<int>>& leaves, LeafQuery mode, int p, int d,
                const std::vector<int>& ref)
{
    std::optional<int> best;
    for (int i = 0; i < static_cast<int>(leaves.size()); ++i) {
        auto tr = truncate(leaves[i], p, d);
        bool ok = false;
        switch (mode) {
        case LeafQuery::MaxEq: ok = tr == ref; break;
        case LeafQuery::MaxLt: ok = tr < ref; break;
        case LeafQuery::MinGeq: ok = !(tr < ref); break;
        case LeafQuery::MinGt: ok = ref < tr; break;
        }
        if (!ok) continue;
        if (mode == LeafQuery::MaxEq || mode == LeafQuery::MaxLt) best = i;
        else if (!best) best = i;
    }
    return best;
}

/// Enumerates every cycle that visits each vertex at most once; reports whether some cycle has a max of the given parity.
inline bool
has_simple_cycle_of_parity(const GameGraph& g, Player parity)
{
    const int n = g.size();
    std::vector<char> on_path(n, 0);
    bool found = false;
    std::function<void(int, int, int)> dfs = [&](int s, int v, int best) {
        for (int e : g.out(v)) {
            if (found) return;
            const Edge& edge = g.edge(e);
            int m = std::max(best, edge.priority);
            if (edge.dst == s) {
                if (parity_of(m) == parity) found = true;
                continue;
            }
            if (edge.dst < s || on_path[edge.dst]) continue;
            on_path[edge.dst] = 1;
            dfs(s, edge.dst, m);
            on_path[edge.dst] = 0;
        }
    };
    for (int s = 0; s < n && !found; ++s) {
        on_path[s] = 1;
        dfs(s, s, 0);
        on_path[s] = 0;
    }
    return found;
}

/// Play from v under positional choices: the priorities of the eventual cycle decide.
inline Player
play_winner(const ParityGame& g, const std::vector<int>& choice, int v)
{
    std::vector<int> seen(g.size(), -1);
    std::vector<int> pri;
    int step = 0;
    while (seen[v] < 0) {
        seen[v] = step++;
        const Edge& e = g.edge(choice[v]);
        pri.push_back(e.priority);
        v = e.dst;
    }
    int best = 0;
    for (int i = seen[v]; i < static_cast<int>(pri.size()); ++i) best = std::max(best, pri[i]);
    return parity_of(best);
}

/**
 * Winning sets by enumerating every positional strategy of Even and, for
 * each, every positional counter-strategy of Odd.
 */
inline std::vector<Player>
brute_force_winners(const ParityGame& g)
{
    const int n = g.size();
    std::vector<int> even_vertices, odd_vertices;
    for (int v = 0; v < n; ++v) (g.owner(v) == Player::Even ? even_vertices : odd_vertices).push_back(v);
    std::vector<char> even_wins(n, 0);
    std::vector<int> choice(n, 0);
    std::function<void(std::size_t)> pick_even = [&](std::size_t i) {
        if (i == even_vertices.size()) {
            std::vector<char> survives(n, 1);
            std::function<void(std::size_t)> pick_odd = [&](std::size_t j) {
                if (j == odd_vertices.size()) {
                    for (int v = 0; v < n; ++v)
                        if (play_winner(g, choice, v) == Player::Odd) survives[v] = 0;
                    return;
                }
                for (int e : g.out(odd_vertices[j])) {
                    choice[odd_vertices[j]] = e;
                    pick_odd(j + 1);
                }
            };
            pick_odd(0);
            for (int v = 0; v < n; ++v)
                if (survives[v]) even_wins[v] = 1;
            return;
        }
        for (int e : g.out(even_vertices[i])) {
            choice[even_vertices[i]] = e;
            pick_even(i + 1);
        }
    };
    pick_even(0);
    std::vector<Player> out(n);
    for (int v = 0; v < n; ++v) out[v] = even_wins[v] ? Player::Even : Player::Odd;
    return out;
}

/// Existential acceptance of u.v^omega by iterating the subset construction until a subset repeats.
inline bool
subset_accepts(const SafetyAutomaton& a, const Lasso& w)
{
    std::set<int> cur = {a.initial()};
    auto read = [&](int letter) {
        std::set<int> next;
        for (int q : cur)
            for (int t : a.successors(q, letter))
                if (!a.is_rejecting(t)) next.insert(t);
        cur = std::move(next);
    };
    if (a.is_rejecting(a.initial())) return false;
    for (int x : w.prefix) read(x);
    std::set<std::set<int>> seen;
    while (!cur.empty() && seen.insert(cur).second)
        for (int x : w.period) read(x);
    return !cur.empty();
}

/// Least fixpoint of the unsafe attractor by repeated full sweeps.
inline std::vector<char>
naive_safe_region(const SafetyGame& g)
{
    const int n = g.size();
    std::vector<char> lost(n, 0);
    for (int v = 0; v < n; ++v) lost[v] = g.unsafe(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (lost[v]) continue;
            bool all = true, any = false;
            for (int u : g.successors(v)) {
                all = all && lost[u];
                any = any || lost[u];
            }
            if ((g.owner(v) == Player::Even && all) || (g.owner(v) == Player::Odd && any)) {
                lost[v] = 1;
                changed = true;
            }
        }
    }
    std::vector<char> safe(n);
    for (int v = 0; v < n; ++v) safe[v] = !lost[v];
    return safe;
}

} // namespace parsep::oracle
