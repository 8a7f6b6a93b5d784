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

#include "parsep/trees.hpp"

#include <benchmark/benchmark.h>

using namespace parsep;

namespace {

void
BM_SuccinctTree(benchmark::State& state)
{
    const int l = static_cast<int>(state.range(0));
    const int h = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(succinct_tree(l, h));
    state.counters["leaves"] = static_cast<double>(succinct_leaf_count(l, h));
}

void
BM_IsUniversal(benchmark::State& state)
{
    const int l = static_cast<int>(state.range(0));
    const int h = static_cast<int>(state.range(1));
    auto t = succinct_tree(l, h);
    for (auto _ : state) benchmark::DoNotOptimize(is_universal(t, l, h));
}

void
BM_MinUniversal(benchmark::State& state)
{
    const int l = static_cast<int>(state.range(0));
    const int h = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(min_universal_size(l, h));
}

void
BM_SizeBoundsTable(benchmark::State& state)
{
    for (auto _ : state)
        for (int l = 1; l <= 64; ++l)
            for (int h = 1; h <= 4; ++h) benchmark::DoNotOptimize(size_bounds(l, h));
}

} // namespace

BENCHMARK(BM_SuccinctTree)->ArgsProduct({{16, 256, 4096}, {2, 4}});
BENCHMARK(BM_IsUniversal)->ArgsProduct({{3, 5}, {2, 3}});
BENCHMARK(BM_MinUniversal)->Args({4, 2})->Args({5, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SizeBoundsTable);

BENCHMARK_MAIN();
