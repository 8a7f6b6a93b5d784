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

#include "parsep/automata.hpp"
#include "parsep/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>

namespace parsep {
namespace {

int
state_named(const SafetyAutomaton& a, const std::string& name)
{
    for (int q = 0; q < a.size(); ++q)
        if (a.name(q) == name) return q;
    ADD_FAILURE() << "no state " << name;
    return -1;
}

int
state_named(const ParityAutomaton& a, const std::string& name)
{
    for (int q = 0; q < a.size(); ++q)
        if (a.name(q) == name) return q;
    ADD_FAILURE() << "no state " << name;
    return -1;
}

/// Bijection between the reachable parts of two deterministic automata, or nullopt.
std::optional<std::map<int, int>>
isomorphism(const SafetyAutomaton& a, const SafetyAutomaton& b)
{
    if (a.alphabet() != b.alphabet()) return std::nullopt;
    std::map<int, int> f, g;
    std::queue<std::pair<int, int>> todo;
    auto bind = [&](int x, int y) {
        auto [it, fresh] = f.emplace(x, y);
        auto [jt, gfresh] = g.emplace(y, x);
        if (it->second != y || jt->second != x) return false;
        if (fresh) todo.push({x, y});
        return true;
    };
    if (!bind(a.initial(), b.initial())) return std::nullopt;
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop();
        if (a.is_rejecting(x) != b.is_rejecting(y)) return std::nullopt;
        for (int p = 1; p <= a.alphabet(); ++p)
            if (!bind(a.step(x, p), b.step(y, p))) return std::nullopt;
    }
    return f;
}

TEST(SafetyAutomaton, NormalizesRejectingStatesIntoSink)
{
    std::vector<int> rejecting = {1, 3};
    std::vector<Transition> t = {{0, 1, 1}, {0, 2, 2}, {2, 1, 0}, {2, 2, 3}, {1, 1, 0}};
    SafetyAutomaton a(4, 2, 0, rejecting, t);
    EXPECT_EQ(a.size(), 3);
    EXPECT_EQ(a.reject(), 2);
    EXPECT_TRUE(a.deterministic());
    EXPECT_EQ(a.step(0, 1), a.reject());
    EXPECT_EQ(a.step(0, 2), 1);
    EXPECT_EQ(a.step(1, 1), 0);
    EXPECT_EQ(a.step(1, 2), a.reject());
    for (int p = 1; p <= 2; ++p) EXPECT_EQ(a.step(a.reject(), p), a.reject());
}

TEST(SafetyAutomaton, CompletesMissingTransitions)
{
    std::vector<Transition> t = {{0, 2, 0}};
    SafetyAutomaton a(1, 2, 0, {}, t);
    EXPECT_EQ(a.size(), 2);
    EXPECT_EQ(a.step(0, 1), a.reject());
    EXPECT_TRUE(accepts_lasso(a, {{}, {2}}));
    EXPECT_FALSE(accepts_lasso(a, {{}, {1, 2}}));
}

TEST(SafetyAutomaton, RejectsBadInput)
{
    std::vector<Transition> letter = {{0, 3, 0}};
    EXPECT_THROW(SafetyAutomaton(1, 2, 0, {}, letter), std::invalid_argument);
    std::vector<Transition> target = {{0, 1, 4}};
    EXPECT_THROW(SafetyAutomaton(1, 2, 0, {}, target), std::invalid_argument);
    EXPECT_THROW(SafetyAutomaton(1, 2, 3, {}, {}), std::invalid_argument);
}

TEST(CounterSeparator, Examples)
{
    auto c24 = counter_separator(2, 4);
    EXPECT_EQ(c24.size(), 10);
    EXPECT_TRUE(c24.deterministic());
    EXPECT_EQ(c24.name(c24.initial()), "<2,2>");
    // even letters reset lower counters to n
    EXPECT_EQ(c24.step(state_named(c24, "<1,0>"), 2), state_named(c24, "<1,2>"));
    EXPECT_EQ(c24.step(state_named(c24, "<1,0>"), 4), state_named(c24, "<2,2>"));
    EXPECT_EQ(c24.step(state_named(c24, "<2,1>"), 3), state_named(c24, "<1,2>"));
    EXPECT_EQ(c24.step(state_named(c24, "<0,1>"), 3), c24.reject());

    auto c22 = counter_separator(2, 2);
    EXPECT_EQ(c22.step(state_named(c22, "<0>"), 1), c22.reject());
    for (int n = 1; n <= 4; ++n)
        for (int d = 2; d <= 6; d += 2) {
            int want = 1;
            for (int i = 0; i < d / 2; ++i) want *= n + 1;
            EXPECT_EQ(counter_separator(n, d).size(), want + 1);
        }
    EXPECT_THROW(counter_separator(2, 3), std::invalid_argument);
    EXPECT_THROW(counter_separator(50, 12, 1000), CapExceeded);
}

TEST(CounterSeparator, RunDet)
{
    auto c = counter_separator(2, 2);
    std::vector<int> empty, two = {1, 1}, three = {1, 1, 1};
    EXPECT_EQ(run_det(c, empty), std::vector<int>{c.initial()});
    auto trace = run_det(c, two);
    ASSERT_EQ(trace.size(), 3u);
    EXPECT_EQ(c.name(trace[0]), "<2>");
    EXPECT_EQ(c.name(trace[1]), "<1>");
    EXPECT_EQ(c.name(trace[2]), "<0>");
    EXPECT_EQ(run_det(c, three).back(), c.reject());
}

TEST(CounterSeparator, AcceptsLassoExamples)
{
    auto c = counter_separator(1, 2);
    EXPECT_TRUE(accepts_lasso(c, {{}, {2}}));
    EXPECT_FALSE(accepts_lasso(c, {{}, {1}}));
}

// The counter separator with counters 0..n has the same transition structure
// as the tree separator of the full (n+1)-ary tree at d = 2. For d > 2 the tree
// separator borrows from a higher level where the counter rejects.
TEST(CounterSeparator, MatchesFullTreeSeparatorAtHeightOne)
{
    for (int n = 1; n <= 6; ++n) {
        auto c = counter_separator(n, 2);
        auto u = tree_separator(full_tree(n + 1, 1), 2);
        auto iso = isomorphism(c, u);
        ASSERT_TRUE(iso.has_value()) << n;
        EXPECT_EQ(static_cast<int>(iso->size()), c.size());
    }
}

TEST(CounterSeparator, AgreesWithFullTreeSeparatorOffBorrowMoves)
{
    // Leaves of the full (n+1)-ary tree correspond to counter vectors; both
    // automata agree on every move except an odd letter on an exhausted counter.
    for (int n = 1; n <= 3; ++n)
        for (int d = 4; d <= 6; d += 2) {
            auto c = counter_separator(n, d);
            auto t = full_tree(n + 1, d / 2);
            auto u = tree_separator(t, d);
            ASSERT_EQ(c.size(), u.size());
            for (int q = 0; q < c.reject(); ++q) {
                auto counters = t.leaf_path(q);
                EXPECT_EQ(c.name(q), u.name(q));
                for (int p = 1; p <= d; ++p) {
                    bool exhausted = p % 2 == 1 && counters[(d - p) / 2] == 0;
                    if (exhausted) {
                        EXPECT_EQ(c.step(q, p), c.reject());
                    } else {
                        EXPECT_EQ(c.step(q, p), u.step(q, p)) << c.name(q) << " on " << p;
                    }
                }
            }
        }
}

TEST(TreeSeparator, FlatTreeTable)
{
    auto u = tree_separator(OrderedTree(TreeShape::flat(2)), 2);
    ASSERT_EQ(u.size(), 3);
    EXPECT_EQ(u.initial(), 1);
    EXPECT_EQ(u.step(1, 1), 0);
    EXPECT_EQ(u.step(0, 1), u.reject());
    EXPECT_EQ(u.step(0, 2), 1);
    EXPECT_EQ(u.step(1, 2), 1);
    EXPECT_THROW(tree_separator(OrderedTree(TreeShape{{TreeShape{}, TreeShape::flat(1)}}), 4), std::invalid_argument);
}

TEST(TreeSeparator, TruncationMonotoneOnSmallLetters)
{
    // reading only letters <= an odd bound p never increases the p-truncation of the state
    auto t = succinct_tree(4, 3);
    auto u = tree_separator(t, 6);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        int bound = 1 + 2 * static_cast<int>(rng() % 3);
        std::vector<int> word;
        for (int i = 0; i < 12; ++i) word.push_back(1 + static_cast<int>(rng() % bound));
        auto trace = run_det(u, word);
        for (std::size_t i = 1; i < trace.size(); ++i) {
            if (u.is_rejecting(trace[i])) break;
            auto before = truncate(t.leaf_path(trace[i - 1]), bound, 6);
            auto after = truncate(t.leaf_path(trace[i]), bound, 6);
            EXPECT_NE(lex_compare(after, before), std::strong_ordering::greater);
            if (word[i - 1] == bound) EXPECT_EQ(lex_compare(after, before), std::strong_ordering::less);
        }
    }
}

TEST(RegisterAutomaton, Examples)
{
    auto r = register_automaton(4, 4);
    EXPECT_EQ(register_count(4), 3);
    EXPECT_EQ(r.size(), 20);
    EXPECT_EQ(r.priority_bound(), 7);
    EXPECT_EQ(r.name(r.initial()), "<1,1,1>");

    int from = state_named(r, "<3,2,1>");
    int updated = state_named(r, "<3,2,2>");
    int reset = state_named(r, "<3,2,1>");
    // non-reset move of priority 1 to the update
    auto moves = r.moves(from, 2);
    EXPECT_NE(std::find(moves.begin(), moves.end(), PriorityMove{1, updated}), moves.end());
    // the 2-reset of the update <3,2,2> has r_2 = 2 even, so priority 4
    EXPECT_NE(std::find(moves.begin(), moves.end(), PriorityMove{4, reset}), moves.end());
    for (int q = 0; q < r.size(); ++q)
        for (int p = 1; p <= 4; ++p) {
            auto m = r.moves(q, p);
            EXPECT_EQ(m.size(), 1u + 3u);
            for (auto mv : m) {
                EXPECT_GE(mv.priority, 1);
                EXPECT_LE(mv.priority, r.priority_bound());
            }
        }
}

TEST(RegisterAutomaton, StateCountIsMultisetCount)
{
    for (int n = 1; n <= 9; ++n)
        for (int d = 2; d <= 6; d += 2) {
            int m = register_count(n);
            EXPECT_EQ(m, floor_lg(n) + 1);
            // non-increasing sequences of length m over 1..d
            EXPECT_EQ(static_cast<std::uint64_t>(register_automaton(n, d).size()), binomial(d + m - 1, m));
            EXPECT_LE(static_cast<std::uint64_t>(register_automaton(n, d).size()), binomial(d + floor_lg(n) + 1, d));
        }
}

TEST(Product, SizeAndBasicLassos)
{
    auto r = register_automaton(2, 2);
    const int m = register_count(2);
    auto s = counter_separator(2, 2 * m + 2);
    auto p = product_parity_safety(r, s);
    EXPECT_EQ(p.size(), r.size() * (s.size() - 1) + 1);
    EXPECT_EQ(p.alphabet(), 2);
    EXPECT_FALSE(accepts_lasso(p, {{}, {1}}));
    EXPECT_TRUE(accepts_lasso(p, {{}, {2}}));
    EXPECT_THROW(product_parity_safety(r, counter_separator(2, 2)), std::invalid_argument);
}

TEST(Product, DeterministicWhenRegisterAutomatonIs)
{
    // single-state, single-move parity automaton copying letters
    std::vector<std::vector<PriorityMove>> moves = {{{1, 0}}, {{2, 0}}};
    ParityAutomaton id(2, 2, 0, moves);
    auto s = counter_separator(2, 2);
    auto p = product_parity_safety(id, s);
    EXPECT_TRUE(p.deterministic());
    EXPECT_TRUE(isomorphism(p, s).has_value());
}

SafetyAutomaton
random_automaton(std::mt19937_64& rng, int states, int alphabet)
{
    std::vector<Transition> t;
    for (int q = 0; q < states; ++q)
        for (int p = 1; p <= alphabet; ++p) {
            int k = static_cast<int>(rng() % 3);
            for (int i = 0; i < k; ++i) t.push_back({q, p, static_cast<int>(rng() % states)});
        }
    std::vector<int> rejecting;
    if (rng() % 2) rejecting.push_back(static_cast<int>(rng() % states));
    return SafetyAutomaton(states, alphabet, 0, rejecting, t);
}

TEST(AcceptsLasso, MatchesSubsetOracle)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_automaton(rng, 1 + static_cast<int>(rng() % 5), 3);
        for (int k = 0; k < 10; ++k) {
            Lasso w;
            for (int i = 0, n = static_cast<int>(rng() % 3); i < n; ++i) w.prefix.push_back(1 + static_cast<int>(rng() % 3));
            for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) w.period.push_back(1 + static_cast<int>(rng() % 3));
            EXPECT_EQ(accepts_lasso(a, w), oracle::subset_accepts(a, w)) << to_string(w);
        }
    }
}

TEST(AcceptsLasso, NondeterministicChoice)
{
    // from 0 on letter 2: a reject-free loop or the sink
    std::vector<Transition> t = {{0, 2, 0}, {0, 2, 1}};
    std::vector<int> rejecting = {1};
    SafetyAutomaton a(2, 2, 0, rejecting, t);
    EXPECT_TRUE(accepts_lasso(a, {{}, {2}}));
    std::vector<Transition> branch = {{0, 2, 1}, {0, 2, 2}, {1, 2, 1}, {2, 1, 2}};
    SafetyAutomaton b(3, 2, 0, {}, branch);
    EXPECT_FALSE(b.deterministic());
    EXPECT_TRUE(accepts_lasso(b, {{}, {2}}));
    EXPECT_TRUE(accepts_lasso(b, {{2}, {1}}));
    EXPECT_FALSE(accepts_lasso(b, {{}, {2, 1}}));
}

TEST(SubsetRun, TracksAllRuns)
{
    std::vector<Transition> branch = {{0, 2, 1}, {0, 2, 2}, {1, 2, 1}, {2, 1, 2}};
    SafetyAutomaton b(3, 2, 0, {}, branch);
    SubsetRun run(b);
    EXPECT_TRUE(run.step(2));
    EXPECT_EQ(run.states().size(), 2u);
    EXPECT_TRUE(run.step(1));
    EXPECT_EQ(run.states().size(), 1u);
    EXPECT_FALSE(run.step(2));
    EXPECT_FALSE(run.alive());
}

TEST(Separators, AcceptEvenClosedWalksRejectOddLassos)
{
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 4; d += 2) {
            std::vector<SafetyAutomaton> seps = {counter_separator(n, d), tree_separator(succinct_tree(n, d / 2), d),
                                                 tree_separator(full_tree(n, d / 2), d)};
            auto r = register_automaton(n, d);
            const int m = register_count(n);
            seps.push_back(product_parity_safety(r, tree_separator(succinct_tree(n * r.size(), m + 1), 2 * m + 2)));
            for (int gi = 0; gi < 15; ++gi) {
                auto g = random_even_graph(n, d, rng);
                auto lassos = sample_closed_walk_lassos(g, 10, rng());
                for (const auto& sep : seps)
                    for (const auto& w : lassos) EXPECT_TRUE(accepts_lasso(sep, w)) << to_string(w);
            }
            for (int trial = 0; trial < 60; ++trial) {
                Lasso w;
                for (int i = 0, k = static_cast<int>(rng() % 4); i < k; ++i) w.prefix.push_back(1 + static_cast<int>(rng() % d));
                for (int i = 0, k = 1 + static_cast<int>(rng() % 4); i < k; ++i) w.period.push_back(1 + static_cast<int>(rng() % d));
                if (classify_lasso(w) != Player::Odd) continue;
                for (const auto& sep : seps) EXPECT_FALSE(accepts_lasso(sep, w)) << to_string(w);
            }
        }
}

} // namespace
} // namespace parsep
