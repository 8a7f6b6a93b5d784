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
#include <span>
#include <vector>

namespace parsep {

/**
 * Compressed adjacency of a directed graph over nodes 0..n-1.
 * Arcs keep the order in which they were added; arc ids are positions in
 * that order, so callers can attach labels in a parallel array.
 */
class Digraph
{
public:
    struct Arc
    {
        int src;
        int dst;
    };

    Digraph() = default;
    Digraph(int nodes, std::span<const Arc> arcs);

    int size() const { return static_cast<int>(offsets_.size()) - 1; }
    int arc_count() const { return static_cast<int>(arc_ids_.size()); }

    /// Ids of arcs leaving `v`, in insertion order.
    std::span<const int> out_arcs(int v) const
    {
        return {arc_ids_.data() + offsets_[v], arc_ids_.data() + offsets_[v + 1]};
    }
    int target(int arc) const { return targets_[arc]; }

private:
    std::vector<int> offsets_{0};
    std::vector<int> arc_ids_;
    std::vector<int> targets_;
};

/**
 * Strongly connected components. Components are numbered in the order Tarjan's
 * algorithm closes them, which is a reverse topological order of the
 * condensation: every arc between distinct components goes from a higher
 * component id to a lower one.
 */
struct SccDecomposition
{
    std::vector<int> component;  ///< component id per node
    int count = 0;
};

SccDecomposition strongly_connected_components(const Digraph& graph);

} // namespace parsep
