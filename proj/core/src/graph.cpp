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

#include "parsep/graph.hpp"

#include <algorithm>

namespace parsep {

Digraph::Digraph(int nodes, std::span<const Arc> arcs)
{
    offsets_.assign(static_cast<std::size_t>(nodes) + 1, 0);
    targets_.reserve(arcs.size());
    for (const auto& a : arcs) {
        ++offsets_[a.src + 1];
        targets_.push_back(a.dst);
    }
    for (int v = 0; v < nodes; ++v) offsets_[v + 1] += offsets_[v];
    arc_ids_.resize(arcs.size());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (int id = 0; id < static_cast<int>(arcs.size()); ++id) {
        arc_ids_[fill[arcs[id].src]++] = id;
    }
}

SccDecomposition
strongly_connected_components(const Digraph& graph)
{
    // Iterative Tarjan; recursion depth would otherwise follow path lengths
    // of product automata, which can be large.
    const int n = graph.size();
    SccDecomposition result;
    result.component.assign(n, -1);

    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    struct Frame
    {
        int node;
        std::size_t next;
    };
    std::vector<Frame> call;
    int counter = 0;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!call.empty()) {
            Frame& f = call.back();
            auto arcs = graph.out_arcs(f.node);
            if (f.next < arcs.size()) {
                int w = graph.target(arcs[f.next++]);
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            int v = f.node;
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back().node;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    result.component[w] = result.count;
                } while (w != v);
                ++result.count;
            }
        }
    }
    return result;
}

} // namespace parsep
