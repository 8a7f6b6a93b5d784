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

#include "parsep/errors.hpp"
#include "parsep/game.hpp"
#include "parsep/graph.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace parsep {
namespace {

ParityGame
single_loop(int priority, Player owner = Player::Even)
{
    return ParityGame({owner}, {{0, 0, priority}});
}

TEST(Pgsolver, SingleVertex)
{
    auto g = parse_pgsolver("parity 1; 0 2 0 0;");
    ASSERT_EQ(g.size(), 1);
    EXPECT_EQ(g.owner(0), Player::Even);
    ASSERT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.edge(0), (Edge{0, 0, 2}));
    EXPECT_EQ(g.d(), 2);
}

TEST(Pgsolver, SourcePriorityOnEdges)
{
    auto g = parse_pgsolver("parity 2; 0 1 1 1; 1 2 0 0;");
    ASSERT_EQ(g.size(), 2);
    EXPECT_EQ(g.owner(0), Player::Odd);
    EXPECT_EQ(g.owner(1), Player::Even);
    EXPECT_EQ(g.edge(g.out(0)[0]), (Edge{0, 1, 1}));
    EXPECT_EQ(g.edge(g.out(1)[0]), (Edge{1, 0, 2}));
    EXPECT_EQ(g.d(), 2);
}

TEST(Pgsolver, Errors)
{
    try {
        parse_pgsolver("parity 1; 0 2 0;");
        FAIL() << "accepted a vertex without successors";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("vertex 0 has no outgoing edge"), std::string::npos);
    }
    EXPECT_THROW(parse_pgsolver("parity 1; 0 2 0 5;"), ParseError);
    EXPECT_THROW(parse_pgsolver("0 2 0 0;"), ParseError);
    EXPECT_THROW(parse_pgsolver("parity 1; 0 x 0 0;"), ParseError);
}

TEST(Pgsolver, ZeroPriorityShift)
{
    auto g = parse_pgsolver("parity 2; 0 0 0 1; 1 1 1 0;");
    EXPECT_EQ(g.edge(g.out(0)[0]).priority, 2);
    EXPECT_EQ(g.edge(g.out(1)[0]).priority, 3);
    EXPECT_EQ(g.d(), 4);
}

TEST(Pgsolver, RoundTrip)
{
    RandomGameOptions opt;
    opt.vertex_priorities = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_game(12, 6, seed, opt);
        auto h = parse_pgsolver(write_pgsolver(g));
        EXPECT_EQ(h.owners(), g.owners());
        EXPECT_EQ(h.edges(), g.edges());
    }
}

TEST(StrategySubgraph, Examples)
{
    ParityGame g({Player::Even}, {{0, 0, 1}, {0, 0, 2}});
    std::vector<int> sigma = {1};
    auto s = strategy_subgraph(g, sigma);
    ASSERT_EQ(s.edges().size(), 1u);
    EXPECT_EQ(s.edge(0).priority, 2);

    ParityGame odd({Player::Odd, Player::Odd}, {{0, 1, 1}, {1, 0, 2}, {1, 1, 3}});
    std::vector<int> none(2, kNoEdge);
    EXPECT_EQ(strategy_subgraph(odd, none).edges(), odd.edges());

    std::vector<int> missing = {kNoEdge};
    EXPECT_THROW(strategy_subgraph(g, missing), std::invalid_argument);
}

TEST(EvenGraph, Examples)
{
    EXPECT_TRUE(is_even_graph(single_loop(2).graph()));
    EXPECT_FALSE(is_even_graph(single_loop(1).graph()));
    EXPECT_TRUE(is_odd_graph(single_loop(1).graph()));
}

TEST(EvenGraph, MatchesCycleEnumeration)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        int d = 2 * (1 + static_cast<int>(rng() % 3));
        std::vector<Edge> edges;
        int m = static_cast<int>(rng() % (2 * n + 1));
        for (int i = 0; i < m; ++i) {
            edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % d)});
        }
        GameGraph g(n, edges, d);
        EXPECT_EQ(is_even_graph(g), !oracle::has_simple_cycle_of_parity(g, Player::Odd)) << "trial " << trial;
        EXPECT_EQ(is_odd_graph(g), !oracle::has_simple_cycle_of_parity(g, Player::Even)) << "trial " << trial;
        auto cyc = find_cycle(g, Player::Odd);
        EXPECT_EQ(cyc.has_value(), oracle::has_simple_cycle_of_parity(g, Player::Odd));
        if (cyc) {
            // consecutive edges, closed, odd maximum
            ASSERT_FALSE(cyc->empty());
            int best = 0;
            for (std::size_t i = 0; i < cyc->size(); ++i) {
                const Edge& e = g.edge((*cyc)[i]);
                const Edge& next = g.edge((*cyc)[(i + 1) % cyc->size()]);
                EXPECT_EQ(e.dst, next.src);
                best = std::max(best, e.priority);
            }
            EXPECT_EQ(best % 2, 1);
        }
    }
}

TEST(Lasso, Classify)
{
    EXPECT_EQ(classify_lasso({{}, {2}}), Player::Even);
    EXPECT_EQ(classify_lasso({{6}, {1}}), Player::Odd);
    EXPECT_EQ(classify_lasso({{}, {1, 2, 3}}), Player::Odd);
}

TEST(Lasso, ClassifyInvariantUnderRotationAndPumping)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Lasso w;
        for (int i = 0, k = static_cast<int>(rng() % 3); i < k; ++i) w.prefix.push_back(1 + static_cast<int>(rng() % 6));
        for (int i = 0, k = 1 + static_cast<int>(rng() % 4); i < k; ++i) w.period.push_back(1 + static_cast<int>(rng() % 6));
        Lasso rotated = w;
        std::rotate(rotated.period.begin(), rotated.period.begin() + 1, rotated.period.end());
        Lasso pumped = w;
        pumped.period.insert(pumped.period.end(), w.period.begin(), w.period.end());
        EXPECT_EQ(classify_lasso(w), classify_lasso(rotated));
        EXPECT_EQ(classify_lasso(w), classify_lasso(pumped));
    }
}

TEST(Lasso, Validate)
{
    EXPECT_THROW((Lasso{{1}, {}}).validate(), std::invalid_argument);
    EXPECT_THROW((Lasso{{}, {5}}).validate(4), std::invalid_argument);
    EXPECT_THROW((Lasso{{0}, {2}}).validate(), std::invalid_argument);
    EXPECT_NO_THROW((Lasso{{3}, {4}}).validate(4));
}

TEST(EvenPathWords, Examples)
{
    auto loop = single_loop(2).graph();
    auto words = sample_even_path_words(loop, 3, 4, 1);
    for (const auto& w : words) EXPECT_EQ(w, (Word{2, 2, 2, 2}));

    GameGraph two(2, {{0, 1, 1}, {1, 0, 2}});
    for (const auto& w : sample_even_path_words(two, 5, 4, 9)) {
        EXPECT_TRUE(w == (Word{1, 2, 1, 2}) || w == (Word{2, 1, 2, 1}));
    }
    EXPECT_EQ(sample_even_path_words(two, 5, 4, 9), sample_even_path_words(two, 5, 4, 9));

    auto odd = single_loop(1).graph();
    EXPECT_THROW(sample_even_path_words(odd, 1, 2, 0), std::invalid_argument);
}

TEST(RandomEvenGraph, IsEven)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_even_graph(1 + trial % 6, 2 + 2 * (trial % 3), rng);
        EXPECT_TRUE(is_even_graph(g));
        EXPECT_FALSE(oracle::has_simple_cycle_of_parity(g, Player::Odd));
        for (const auto& w : sample_closed_walk_lassos(g, 5, trial)) EXPECT_EQ(classify_lasso(w), Player::Even);
    }
}

TEST(RandomGame, DeterministicAndWellFormed)
{
    auto a = random_game(15, 6, 42);
    auto b = random_game(15, 6, 42);
    EXPECT_EQ(a.edges(), b.edges());
    EXPECT_EQ(a.owners(), b.owners());
    for (int v = 0; v < a.size(); ++v) EXPECT_GE(a.graph().out_degree(v), 1);
    for (const auto& e : a.edges()) {
        EXPECT_GE(e.priority, 1);
        EXPECT_LE(e.priority, 6);
    }
}

TEST(Graph, SccMatchesMutualReachability)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Digraph::Arc> arcs;
        for (int i = 0, m = static_cast<int>(rng() % (2 * n + 1)); i < m; ++i) {
            arcs.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        }
        Digraph g(n, arcs);
        auto scc = strongly_connected_components(g);
        // Floyd-Warshall style closure as the oracle
        std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
        for (int v = 0; v < n; ++v) reach[v][v] = 1;
        for (auto [a, b] : arcs) reach[a][b] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                EXPECT_EQ(scc.component[i] == scc.component[j], reach[i][j] && reach[j][i]);
                // reverse topological numbering: arcs never go to a higher component
                if (reach[i][j]) EXPECT_GE(scc.component[i], scc.component[j]);
            }
    }
}

} // namespace
} // namespace parsep
