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
#include "parsep/solvers.hpp"

#include <benchmark/benchmark.h>

using namespace parsep;

namespace {

ParityGame
game_for(const benchmark::State& state)
{
    return random_game(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
}

void
BM_Zielonka(benchmark::State& state)
{
    auto g = game_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(zielonka(g));
}

void
BM_SeparationCounter(benchmark::State& state)
{
    auto g = game_for(state);
    auto a = counter_separator(g.size(), g.d());
    SeparationStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(solve_by_separation(g, a, &stats));
    state.counters["product_states"] = static_cast<double>(stats.product_states);
}

void
BM_SeparationTree(benchmark::State& state)
{
    auto g = game_for(state);
    auto a = tree_separator(succinct_tree(g.size(), g.d() / 2), g.d());
    SeparationStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(solve_by_separation(g, a, &stats));
    state.counters["product_states"] = static_cast<double>(stats.product_states);
}

void
BM_LiftSuccinct(benchmark::State& state)
{
    auto g = game_for(state);
    auto t = succinct_tree(g.size(), g.d() / 2);
    std::uint64_t lifts = 0;
    for (auto _ : state) lifts = lift_solve(g, t).lifts;
    state.counters["lifts"] = static_cast<double>(lifts);
}

void
BM_LiftFull(benchmark::State& state)
{
    auto g = game_for(state);
    auto t = full_tree(g.size(), g.d() / 2);
    for (auto _ : state) benchmark::DoNotOptimize(lift_solve(g, t));
}

} // namespace

BENCHMARK(BM_Zielonka)->ArgsProduct({{10, 50, 200}, {4, 8}});
BENCHMARK(BM_SeparationCounter)->ArgsProduct({{10, 20}, {4, 6}});
BENCHMARK(BM_SeparationTree)->ArgsProduct({{10, 50, 200}, {4, 8}});
BENCHMARK(BM_LiftSuccinct)->ArgsProduct({{10, 50, 200}, {4, 8}});
BENCHMARK(BM_LiftFull)->ArgsProduct({{10, 20}, {4, 6}});

BENCHMARK_MAIN();
