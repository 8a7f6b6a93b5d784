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

#include "parsep/automata.hpp"
#include "parsep/game.hpp"
#include "parsep/trees.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace parsep {

/**
 * Safety game: Even is the safety player and must keep the play out of the
 * unsafe vertices forever; Odd tries to reach them.
 */
class SafetyGame
{
public:
    SafetyGame() = default;
    /// successors[v] lists the moves from v; every vertex needs at least one.
    SafetyGame(std::vector<Player> owner, const std::vector<std::vector<int>>& successors, std::vector<char> unsafe);

    int size() const { return static_cast<int>(owner_.size()); }
    Player owner(int v) const { return owner_[v]; }
    bool unsafe(int v) const { return unsafe_[v] != 0; }
    std::span<const int> successors(int v) const { return slice(succ_off_, succ_, v); }
    std::span<const int> predecessors(int v) const { return slice(pred_off_, pred_, v); }
    std::size_t edge_count() const { return succ_.size(); }

private:
    static std::span<const int> slice(const std::vector<std::size_t>& off, const std::vector<int>& ids, int v)
    {
        return {ids.data() + off[v], ids.data() + off[v + 1]};
    }

    std::vector<Player> owner_;
    std::vector<char> unsafe_;
    std::vector<std::size_t> succ_off_{0}, pred_off_{0};
    std::vector<int> succ_, pred_;
};

/// Layout of the explicit chained product, for mapping back to G.
struct ProductLayout
{
    int game_vertices = 0;
    int automaton_states = 0;
    /// (u, p) pairs owning intermediate Even vertices, nondeterministic case only.
    std::vector<std::pair<int, int>> choice_points;

    int vertex(int v, int q) const { return v * automaton_states + q; }
};

struct ChainedProduct
{
    SafetyGame game;
    ProductLayout layout;
};

/**
 * Safety game running A on the priorities of a play of G. Vertices (v, q)
 * come first, numbered v * |Q| + q. If A is nondeterministic, each move
 * into u with priority p passes through an Even vertex (u, q, p) that picks
 * the automaton successor.
 */
ChainedProduct chained_product(const ParityGame& game, const SafetyAutomaton& a);

struct SafetySolution
{
    std::vector<char> safe;  ///< Even keeps the play safe from here
    /// Successor position (index into successors(v)) for safe Even vertices, -1 elsewhere.
    std::vector<int> choice;
};

SafetySolution solve_safety(const SafetyGame& game);

/**
 * Even strategy whose memory is an automaton state. The play starts with
 * memory `initial_memory`; at an Even vertex v with memory m it takes edge
 * move[(v, m)], and after any edge e the memory becomes update[(e, m)].
 */
struct MemoryStrategy
{
    int memory_size = 0;
    int initial_memory = 0;
    std::unordered_map<std::uint64_t, int> move;
    std::unordered_map<std::uint64_t, int> update;

    std::uint64_t key(int x, int m) const
    {
        return static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(memory_size) + static_cast<std::uint64_t>(m);
    }
};

struct Solution
{
    std::vector<Player> winner;
    /// Positional strategy: for each vertex won by its owner, the chosen edge; kNoEdge elsewhere.
    Strategy strategy;
    /// Replaces the positional Even strategy when present.
    std::optional<MemoryStrategy> even_memory;

    std::vector<char> region(Player p) const;
};

struct SeparationStats
{
    std::uint64_t product_states = 0;
    std::uint64_t product_edges = 0;
};

/**
 * Solves G through the safety game G x A. Even wins from v iff (v, initial)
 * is safe. Even's strategy is read off the product as a memory strategy; Odd's
 * strategy on the complement is completed by zielonka on that subgame.
 */
Solution solve_by_separation(const ParityGame& game, const SafetyAutomaton& a, SeparationStats* stats = nullptr);

/// Per-vertex leaf rank; leaf_count() of the tree stands for top.
using TreeLabelling = std::vector<int>;

struct LiftResult
{
    /// Winning sets and Even's positional strategy; Odd's strategy is left empty.
    Solution solution;
    TreeLabelling labelling;
    int top = 0;
    std::uint64_t lifts = 0;
};

/// Called on every label increase with (vertex, old label, new label).
using LiftObserver = std::function<void(int, int, int)>;

/**
 * Least progress measure into T by lifting from the all-least labelling.
 * T must have full-depth leaves at height d/2.
 */
LiftResult lift_solve(const ParityGame& game, const OrderedTree& tree, const LiftObserver& observer = {});

/**
 * Does every edge of the strategy subgraph of `sigma` satisfy the progress
 * condition for `mu`? `mu` must be total (no top).
 */
bool check_progress_measure(const ParityGame& game, const OrderedTree& tree, std::span<const int> sigma,
                            std::span<const int> mu);

/// Recursive algorithm with positional strategies for both players.
Solution zielonka(const ParityGame& game);

/// Fills Odd's (or Even's) missing strategy by solving that player's winning subgame.
void complete_strategies(const ParityGame& game, Solution& solution);

/// Even's strategy keeps her region closed and only yields even cycles there.
bool verify_even_side(const ParityGame& game, const Solution& solution);
/// Odd's strategy keeps his region closed and only yields odd cycles there.
bool verify_odd_side(const ParityGame& game, const Solution& solution);
/// Both sides, and the winning sets partition the vertices.
bool verify_solution(const ParityGame& game, const Solution& solution);

/**
 * Explores every play consistent with `strategy` from the vertices of
 * `region` and checks that it stays in the region and only closes even cycles.
 */
bool verify_memory_strategy(const ParityGame& game, std::span<const char> region, const MemoryStrategy& strategy);

} // namespace parsep
