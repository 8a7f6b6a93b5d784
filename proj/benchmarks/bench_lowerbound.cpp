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
#include "parsep/lowerbound.hpp"

#include <benchmark/benchmark.h>

using namespace parsep;

namespace {

void
BM_ExtractCounter(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    auto a = make_accessible(counter_separator(n, d));
    for (auto _ : state) benchmark::DoNotOptimize(extract_decomposition(a, d));
    state.counters["states"] = a.size();
}

void
BM_RegisterProduct(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    auto r = register_automaton(n, d);
    const int m = register_count(n);
    auto s = tree_separator(succinct_tree(n * r.size(), m + 1), 2 * m + 2);
    for (auto _ : state) benchmark::DoNotOptimize(product_parity_safety(r, s));
}

void
BM_AlphaStream(benchmark::State& state)
{
    auto t = succinct_tree(8, 3);
    for (auto _ : state) {
        AlphaStream s(t, 6, 8);
        for (int i = 0; i < 100'000; ++i) benchmark::DoNotOptimize(s.next());
    }
    state.SetItemsProcessed(state.iterations() * 100'000);
}

} // namespace

BENCHMARK(BM_ExtractCounter)->ArgsProduct({{2, 4, 8}, {4, 6}});
BENCHMARK(BM_RegisterProduct)->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaStream);

BENCHMARK_MAIN();
