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

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parsep {

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }

/// The player favoured by a priority under the max-parity condition.
constexpr Player parity_of(int priority) { return priority % 2 == 0 ? Player::Even : Player::Odd; }

std::string_view to_string(Player p);

/// Smallest even number that is >= max(priority, 2).
constexpr int even_bound(int max_priority)
{
    int d = max_priority < 2 ? 2 : max_priority;
    return d % 2 == 0 ? d : d + 1;
}

using Word = std::vector<int>;

struct Edge
{
    int src;
    int dst;
    int priority;

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr int kNoEdge = -1;

/**
 * Directed graph with edge priorities in 1..d, d even. Out-degree zero is
 * allowed here; ParityGame enforces the no-dead-end assumption.
 */
class GameGraph
{
public:
    GameGraph() = default;
    /// `d == 0` derives d from the largest edge priority.
    GameGraph(int vertices, std::vector<Edge> edges, int d = 0);

    int size() const { return n_; }
    int d() const { return d_; }
    int max_priority() const { return max_priority_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    /// Edge ids leaving / entering `v`, in insertion order.
    std::span<const int> out(int v) const { return slice(out_offsets_, out_ids_, v); }
    std::span<const int> in(int v) const { return slice(in_offsets_, in_ids_, v); }
    int out_degree(int v) const { return out_offsets_[v + 1] - out_offsets_[v]; }

private:
    static std::span<const int> slice(const std::vector<int>& off, const std::vector<int>& ids, int v)
    {
        return {ids.data() + off[v], ids.data() + off[v + 1]};
    }

    int n_ = 0;
    int d_ = 2;
    int max_priority_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> out_offsets_{0}, out_ids_;
    std::vector<int> in_offsets_{0}, in_ids_;
};

/// A game graph with vertex ownership; every vertex has an outgoing edge.
class ParityGame
{
public:
    ParityGame() = default;
    ParityGame(std::vector<Player> owner, std::vector<Edge> edges, int d = 0);

    int size() const { return graph_.size(); }
    int d() const { return graph_.d(); }
    Player owner(int v) const { return owner_[v]; }
    const std::vector<Player>& owners() const { return owner_; }
    const GameGraph& graph() const { return graph_; }

    const std::vector<Edge>& edges() const { return graph_.edges(); }
    const Edge& edge(int id) const { return graph_.edge(id); }
    std::span<const int> out(int v) const { return graph_.out(v); }
    std::span<const int> in(int v) const { return graph_.in(v); }

private:
    GameGraph graph_;
    std::vector<Player> owner_;
};

/// Edge id chosen per vertex; kNoEdge where a player does not move.
using Strategy = std::vector<int>;

/**
 * Reads the PGSolver vertex-priority format. Each edge receives the priority
 * of its source vertex; if any priority is 0, every priority is shifted by
 * +2. Vertex ids are renumbered densely in increasing order.
 */
ParityGame parse_pgsolver(std::string_view text);

/// Writes a game whose out-edges share their source priority (throws otherwise).
std::string write_pgsolver(const ParityGame& game);

/// Odd-owned edges plus exactly the edges `sigma` picks at Even vertices.
GameGraph strategy_subgraph(const ParityGame& game, std::span<const int> sigma);

/**
 * Some cycle whose largest priority has the given parity, as a list of
 * edge ids in walking order; nullopt if no such cycle exists.
 */
std::optional<std::vector<int>> find_cycle(const GameGraph& graph, Player parity);

/// True iff every cycle has an even largest priority.
bool is_even_graph(const GameGraph& graph);

/// True iff every cycle has an odd largest priority.
bool is_odd_graph(const GameGraph& graph);

/// Ultimately periodic word prefix . period^omega.
struct Lasso
{
    Word prefix;
    Word period;

    /// Throws std::invalid_argument unless the period is nonempty and letters lie in 1..d (d == 0: no upper bound).
    void validate(int d = 0) const;
    int max_letter() const;

    friend bool operator==(const Lasso&, const Lasso&) = default;
};

std::string to_string(const Lasso& w);

/// Parity of the largest letter that occurs infinitely often.
Player classify_lasso(const Lasso& w);

/**
 * Priority projections of `count` random walks of `length` edges on an even
 * graph. Deterministic for a fixed seed.
 */
std::vector<Word> sample_even_path_words(const GameGraph& graph, int count, int length, std::uint64_t seed,
                                         std::optional<int> start = std::nullopt);

/// Random walks stopped at the first repeated vertex, read as prefix . cycle^omega.
std::vector<Lasso> sample_closed_walk_lassos(const GameGraph& graph, int count, std::uint64_t seed);

struct RandomGameOptions
{
    int max_out_degree = 3;
    /// All edges leaving a vertex share one priority (PGSolver-expressible).
    bool vertex_priorities = false;
};

ParityGame random_game(int n, int d, std::uint64_t seed, const RandomGameOptions& options = {});

/**
 * Random even graph on n vertices with priorities up to d. Vertices get
 * random leaves of the full n-ary tree of height d/2 and only edges
 * satisfying the progress condition are kept, so every cycle is even.
 */
GameGraph random_even_graph(int n, int d, std::mt19937_64& rng, int edge_attempts = 0);

} // namespace parsep
