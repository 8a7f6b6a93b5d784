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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace parsep {

/**
 * Value form of an ordered tree: a node is the ordered list of its child
 * subtrees, a leaf has none. Used for enumeration, comparison and
 * serialization; OrderedTree is the indexed form used by the algorithms.
 */
struct TreeShape
{
    std::vector<TreeShape> children;

    static TreeShape leaf() { return {}; }
    /// A unary chain of the given height ending in one leaf.
    static TreeShape path(int height);
    /// A root with `leaves` leaf children.
    static TreeShape flat(int leaves);

    bool is_leaf() const { return children.empty(); }
    int leaves() const;
    int height() const;

    friend bool operator==(const TreeShape&, const TreeShape&) = default;
    friend std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b);
};

/// Lexicographic order on direction sequences; a proper prefix is smaller.
std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b);

/// Number of leading directions kept by the p-truncation of a leaf of a height-d/2 tree.
int truncation_length(int p, int d);

/**
 * p-truncation of a full-depth leaf <m_{d-1}, ..., m_1>: the prefix up to
 * m_p for odd p and up to m_{p+1} for even p.
 */
std::vector<int> truncate(std::span<const int> leaf, int p, int d);

enum class LeafQuery {
    MaxEq,   ///< largest leaf whose truncation equals the reference
    MaxLt,   ///< largest leaf whose truncation is smaller
    MinGeq,  ///< smallest leaf whose truncation is not smaller
    MinGt,   ///< smallest leaf whose truncation is larger
};

/**
 * Immutable ordered tree. Node 0 is the root; branching directions are the
 * positions 0, 1, ... among siblings. Leaves are ranked in lexicographic
 * order, and every node knows the half-open rank range of the leaves below
 * it, so truncation queries reduce to range lookups.
 */
class OrderedTree
{
public:
    class Builder
    {
    public:
        Builder();
        int root() const { return 0; }
        int add_child(int parent);
        OrderedTree build() &&;

    private:
        friend class OrderedTree;
        std::vector<std::vector<int>> children_;
        std::vector<int> parent_;
    };

    /// The single-node tree.
    OrderedTree();
    explicit OrderedTree(const TreeShape& shape);

    TreeShape shape() const;

    int node_count() const { return static_cast<int>(parent_.size()); }
    int parent(int node) const { return parent_[node]; }
    int depth(int node) const { return depth_[node]; }
    std::span<const int> children(int node) const { return children_[node]; }
    bool is_leaf(int node) const { return children_[node].empty(); }
    /// Position of `node` among its siblings.
    int direction(int node) const { return direction_[node]; }

    int height() const { return height_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    /// True iff every leaf sits at depth height().
    bool full_depth() const { return full_depth_; }

    int leaf_node(int rank) const { return leaves_[rank]; }
    /// Rank range [first, last) of the leaves in the subtree of `node`.
    std::pair<int, int> leaf_range(int node) const { return {lo_[node], hi_[node]}; }

    /// Ancestor of `node` at the given depth (<= depth(node)).
    int ancestor(int node, int at_depth) const;
    /// Direction sequence from the root to `node`.
    std::vector<int> path(int node) const;
    std::vector<int> leaf_path(int rank) const { return path(leaves_[rank]); }
    std::optional<int> find(std::span<const int> directions) const;

    /// Leaf-rank answer to a truncation query (see LeafQuery); the tree must have height d/2.
    std::optional<int> leaf_query(LeafQuery mode, int p, int d, std::span<const int> ref) const;

private:
    void index();

    std::vector<std::vector<int>> children_;
    std::vector<int> parent_, depth_, direction_, lo_, hi_, leaves_;
    int height_ = 0;
    bool full_depth_ = true;
};

inline constexpr std::uint64_t kDefaultLeafCap = 5'000'000;

/// Every internal node has n children, all leaves at depth h.
OrderedTree full_tree(int n, int h, std::uint64_t cap = kDefaultLeafCap);

/**
 * Quasi-polynomial universal tree: the root's children are those of
 * T(l/2, h), then one child carrying T(l, h-1), then those of T(l/2, h).
 * T(l, 0) is a single leaf and T(0, h) has no leaves.
 */
OrderedTree succinct_tree(int l, int h, std::uint64_t cap = kDefaultLeafCap);

/// Leaf count of succinct_tree(l, h), saturating at UINT64_MAX.
std::uint64_t succinct_leaf_count(int l, int h);

/**
 * Root-preserving embedding of `small` into `large`: children are mapped
 * injectively and in order onto children of the image. Greedy leftmost
 * matching of child sequences is exact, memoized per node pair.
 */
bool embeds(const OrderedTree& small, const OrderedTree& large);

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Number of ordered trees with exactly `leaves` leaves, all at depth exactly h.
std::uint64_t count_trees(int leaves, int height);

/// All ordered trees with exactly `leaves` leaves, all at depth exactly h.
std::vector<TreeShape> enumerate_trees(int leaves, int height, std::uint64_t cap = kDefaultEnumerationCap);

/// Does every tree of height <= h with <= l leaves embed into `tree`?
bool is_universal(const OrderedTree& tree, int l, int h, std::uint64_t cap = kDefaultEnumerationCap);

struct SizeBounds
{
    std::uint64_t g = 0;            ///< lower-bound recurrence value
    std::uint64_t binom_lower = 0;  ///< C(floor(lg l) + h - 1, h - 1)
    std::uint64_t jl_upper = 0;     ///< 2l * C(ceil(lg l) + h + 1, h)
};

int floor_lg(std::uint64_t x);
int ceil_lg(std::uint64_t x);
/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// g(l, h) = sum_{delta=1..l} g(floor(l/delta), h-1), g(l, 1) = l, g(1, h) = 1.
std::uint64_t lower_bound_recurrence(int l, int h);

SizeBounds size_bounds(int l, int h);

/**
 * Fewest leaves of an (l, h)-universal tree, by exact search. Children of
 * the root only matter through which height-(h-1) trees with <= l leaves
 * embed into them; the search runs a shortest-path over the sets of pending
 * embedding obligations.
 */
std::uint64_t min_universal_size(int l, int h, std::uint64_t cap = kDefaultEnumerationCap);

/// Extends every leaf above depth h with a unary chain down to depth h.
TreeShape pad_to_depth(const TreeShape& tree, int h);

} // namespace parsep
