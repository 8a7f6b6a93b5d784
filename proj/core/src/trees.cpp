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

#include "parsep/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace parsep {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t
sat_add(std::uint64_t a, std::uint64_t b)
{
    return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t
sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

} // namespace

// ---------------------------------------------------------------------------
// TreeShape

TreeShape
TreeShape::path(int height)
{
    TreeShape t;
    for (int i = 0; i < height; ++i) {
        TreeShape parent;
        parent.children.push_back(std::move(t));
        t = std::move(parent);
    }
    return t;
}

TreeShape
TreeShape::flat(int leaves)
{
    TreeShape t;
    t.children.resize(leaves);
    return t;
}

int
TreeShape::leaves() const
{
    if (children.empty()) return 1;
    int sum = 0;
    for (const auto& c : children) sum += c.leaves();
    return sum;
}

int
TreeShape::height() const
{
    int h = 0;
    for (const auto& c : children) h = std::max(h, 1 + c.height());
    return h;
}

std::strong_ordering
operator<=>(const TreeShape& a, const TreeShape& b)
{
    return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(), b.children.begin(),
                                                  b.children.end());
}

// ---------------------------------------------------------------------------
// Truncations

std::strong_ordering
lex_compare(std::span<const int> a, std::span<const int> b)
{
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

int
truncation_length(int p, int d)
{
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("d must be even and >= 2");
    if (p < 1 || p > d) throw std::invalid_argument("priority " + std::to_string(p) + " outside 1.." + std::to_string(d));
    return (d - p + 1) / 2;
}

std::vector<int>
truncate(std::span<const int> leaf, int p, int d)
{
    int len = truncation_length(p, d);
    if (static_cast<int>(leaf.size()) != d / 2) throw std::invalid_argument("leaf is not of depth d/2");
    return {leaf.begin(), leaf.begin() + len};
}

// ---------------------------------------------------------------------------
// OrderedTree

OrderedTree::Builder::Builder() : children_(1), parent_{-1} {}

int
OrderedTree::Builder::add_child(int parent)
{
    int id = static_cast<int>(parent_.size());
    children_[parent].push_back(id);
    children_.emplace_back();
    parent_.push_back(parent);
    return id;
}

OrderedTree
OrderedTree::Builder::build() &&
{
    OrderedTree t;
    t.children_ = std::move(children_);
    t.parent_ = std::move(parent_);
    t.index();
    return t;
}

OrderedTree::OrderedTree() : children_(1), parent_{-1}
{
    index();
}

OrderedTree::OrderedTree(const TreeShape& shape)
{
    Builder b;
    std::vector<std::pair<const TreeShape*, int>> stack{{&shape, 0}};
    while (!stack.empty()) {
        auto [s, node] = stack.back();
        stack.pop_back();
        std::vector<int> ids;
        for (std::size_t i = 0; i < s->children.size(); ++i) ids.push_back(b.add_child(node));
        for (std::size_t i = 0; i < ids.size(); ++i) stack.push_back({&s->children[i], ids[i]});
    }
    *this = std::move(b).build();
}

void
OrderedTree::index()
{
    const int n = node_count();
    depth_.assign(n, 0);
    direction_.assign(n, 0);
    lo_.assign(n, 0);
    hi_.assign(n, 0);
    leaves_.clear();
    height_ = 0;

    // preorder with children visited in increasing direction = lexicographic order
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ch = children_[v];
        for (int i = static_cast<int>(ch.size()) - 1; i >= 0; --i) {
            depth_[ch[i]] = depth_[v] + 1;
            direction_[ch[i]] = i;
            stack.push_back(ch[i]);
        }
    }
    for (int v : order) {
        height_ = std::max(height_, depth_[v]);
        if (children_[v].empty()) {
            lo_[v] = static_cast<int>(leaves_.size());
            hi_[v] = lo_[v] + 1;
            leaves_.push_back(v);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (children_[v].empty()) continue;
        lo_[v] = lo_[children_[v].front()];
        hi_[v] = hi_[children_[v].back()];
    }
    full_depth_ = std::all_of(leaves_.begin(), leaves_.end(), [this](int v) { return depth_[v] == height_; });
}

TreeShape
OrderedTree::shape() const
{
    std::function<TreeShape(int)> rec = [&](int v) {
        TreeShape s;
        for (int c : children_[v]) s.children.push_back(rec(c));
        return s;
    };
    return rec(0);
}

int
OrderedTree::ancestor(int node, int at_depth) const
{
    if (at_depth < 0 || at_depth > depth_[node]) throw std::invalid_argument("ancestor depth out of range");
    for (int k = depth_[node]; k > at_depth; --k) node = parent_[node];
    return node;
}

std::vector<int>
OrderedTree::path(int node) const
{
    std::vector<int> p(depth_[node]);
    for (int k = depth_[node] - 1; k >= 0; --k) {
        p[k] = direction_[node];
        node = parent_[node];
    }
    return p;
}

std::optional<int>
OrderedTree::find(std::span<const int> directions) const
{
    int v = 0;
    for (int dir : directions) {
        if (dir < 0 || dir >= static_cast<int>(children_[v].size())) return std::nullopt;
        v = children_[v][dir];
    }
    return v;
}

std::optional<int>
OrderedTree::leaf_query(LeafQuery mode, int p, int d, std::span<const int> ref) const
{
    const int len = truncation_length(p, d);
    if (height_ != d / 2 || !full_depth_) throw std::invalid_argument("leaf_query needs a full-depth tree of height d/2");
    if (static_cast<int>(ref.size()) != len) throw std::invalid_argument("reference is not p-truncation shaped");

    auto key_cmp = [&](int rank) {
        auto prefix = path(ancestor(leaves_[rank], len));
        return lex_compare(prefix, ref);
    };
    // leaves are sorted, so their prefixes are too
    auto first_where = [&](auto pred) {
        int lo = 0, hi = leaf_count();
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            if (pred(key_cmp(mid))) hi = mid;
            else lo = mid + 1;
        }
        return lo;
    };
    const int geq = first_where([](std::strong_ordering c) { return c >= 0; });
    const int gt = first_where([](std::strong_ordering c) { return c > 0; });
    switch (mode) {
    case LeafQuery::MaxEq:
        return gt > geq ? std::optional<int>(gt - 1) : std::nullopt;
    case LeafQuery::MaxLt:
        return geq > 0 ? std::optional<int>(geq - 1) : std::nullopt;
    case LeafQuery::MinGeq:
        return geq < leaf_count() ? std::optional<int>(geq) : std::nullopt;
    case LeafQuery::MinGt:
        return gt < leaf_count() ? std::optional<int>(gt) : std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions

OrderedTree
full_tree(int n, int h, std::uint64_t cap)
{
    if (n < 1 || h < 0) throw std::invalid_argument("full_tree needs n >= 1 and h >= 0");
    std::uint64_t leaves = 1;
    for (int i = 0; i < h; ++i) leaves = sat_mul(leaves, static_cast<std::uint64_t>(n));
    if (leaves > cap) {
        throw CapExceeded("full_tree(" + std::to_string(n) + "," + std::to_string(h) + ") has more than " +
                          std::to_string(cap) + " leaves");
    }
    OrderedTree::Builder b;
    std::vector<int> level{b.root()};
    for (int k = 0; k < h; ++k) {
        std::vector<int> next;
        next.reserve(level.size() * n);
        for (int v : level)
            for (int i = 0; i < n; ++i) next.push_back(b.add_child(v));
        level = std::move(next);
    }
    return std::move(b).build();
}

std::uint64_t
succinct_leaf_count(int l, int h)
{
    if (l < 0 || h < 0) throw std::invalid_argument("succinct_leaf_count needs l, h >= 0");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int)> f = [&](int ll, int hh) -> std::uint64_t {
        if (hh == 0) return 1;
        if (ll == 0) return 0;
        auto key = std::make_pair(ll, hh);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t v = sat_add(sat_mul(2, f(ll / 2, hh)), f(ll, hh - 1));
        memo[key] = v;
        return v;
    };
    return f(l, h);
}

namespace {

void
grow_succinct(OrderedTree::Builder& b, int parent, int l, int h)
{
    if (h == 0 || l == 0) return;
    grow_succinct(b, parent, l / 2, h);
    int middle = b.add_child(parent);
    grow_succinct(b, middle, l, h - 1);
    grow_succinct(b, parent, l / 2, h);
}

} // namespace

OrderedTree
succinct_tree(int l, int h, std::uint64_t cap)
{
    if (l < 1 || h < 0) throw std::invalid_argument("succinct_tree needs l >= 1 and h >= 0");
    std::uint64_t leaves = succinct_leaf_count(l, h);
    if (leaves > cap) {
        throw CapExceeded("succinct_tree(" + std::to_string(l) + "," + std::to_string(h) + ") has " +
                          std::to_string(leaves) + " leaves, cap is " + std::to_string(cap));
    }
    OrderedTree::Builder b;
    grow_succinct(b, b.root(), l, h);
    return std::move(b).build();
}

bool
embeds(const OrderedTree& small, const OrderedTree& large)
{
    const int ns = small.node_count(), nl = large.node_count();
    std::vector<std::int8_t> memo(static_cast<std::size_t>(ns) * nl, -1);
    std::function<bool(int, int)> fits = [&](int x, int y) -> bool {
        auto& m = memo[static_cast<std::size_t>(x) * nl + y];
        if (m >= 0) return m;
        auto cx = small.children(x);
        auto cy = large.children(y);
        bool ok = cx.size() <= cy.size();
        std::size_t j = 0;
        for (std::size_t i = 0; ok && i < cx.size(); ++i) {
            while (j < cy.size() && !fits(cx[i], cy[j])) ++j;
            if (j == cy.size()) ok = false;
            else ++j;
        }
        m = ok ? 1 : 0;
        return ok;
    };
    return fits(0, 0);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

/// Number of sequences of full-depth height-(h-1) trees with `leaves` leaves in total.
std::uint64_t
count_sequences(int leaves, int h, std::map<std::pair<int, int>, std::uint64_t>& memo);

std::uint64_t
count_full(int leaves, int h, std::map<std::pair<int, int>, std::uint64_t>& memo)
{
    if (leaves < 1) return 0;
    if (h == 0) return leaves == 1 ? 1 : 0;
    return count_sequences(leaves, h, memo);
}

std::uint64_t
count_sequences(int leaves, int h, std::map<std::pair<int, int>, std::uint64_t>& memo)
{
    if (leaves == 0) return 1;
    auto key = std::make_pair(leaves, h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int first = 1; first <= leaves; ++first) {
        total = sat_add(total, sat_mul(count_full(first, h - 1, memo), count_sequences(leaves - first, h, memo)));
    }
    memo[key] = total;
    return total;
}

class TreeEnumerator
{
public:
    const std::vector<TreeShape>& trees(int leaves, int h)
    {
        auto key = std::make_pair(leaves, h);
        if (auto it = trees_.find(key); it != trees_.end()) return it->second;
        std::vector<TreeShape> out;
        if (h == 0) {
            if (leaves == 1) out.push_back(TreeShape::leaf());
        } else {
            // first child, then the children of a tree holding the remaining leaves
            for (int first = 1; first <= leaves; ++first) {
                const auto& heads = trees(first, h - 1);
                if (heads.empty()) continue;
                if (first == leaves) {
                    for (const auto& head : heads) out.push_back(TreeShape{{head}});
                    continue;
                }
                const auto& tails = trees(leaves - first, h);
                for (const auto& head : heads) {
                    for (const auto& tail : tails) {
                        TreeShape t;
                        t.children.reserve(tail.children.size() + 1);
                        t.children.push_back(head);
                        t.children.insert(t.children.end(), tail.children.begin(), tail.children.end());
                        out.push_back(std::move(t));
                    }
                }
            }
        }
        return trees_[key] = std::move(out);
    }

private:
    std::map<std::pair<int, int>, std::vector<TreeShape>> trees_;
};

} // namespace

std::uint64_t
count_trees(int leaves, int height)
{
    if (height < 0) throw std::invalid_argument("negative height");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    return count_full(leaves, height, memo);
}

std::vector<TreeShape>
enumerate_trees(int leaves, int height, std::uint64_t cap)
{
    std::uint64_t count = count_trees(leaves, height);
    if (count > cap) {
        throw CapExceeded("enumerating " + std::to_string(count) + " trees exceeds the cap of " + std::to_string(cap));
    }
    TreeEnumerator e;
    return e.trees(leaves, height);
}

bool
is_universal(const OrderedTree& tree, int l, int h, std::uint64_t cap)
{
    if (l < 1 || h < 0) throw std::invalid_argument("is_universal needs l >= 1 and h >= 0");
    if (h == 0) return true;
    if (tree.height() < h) return false;
    // A tree with fewer leaves or shallower leaves can be padded to exactly
    // l leaves at depth h, and embeds whenever its padding does.
    for (const auto& t : enumerate_trees(l, h, cap)) {
        if (!embeds(OrderedTree(t), tree)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Size bounds

int
floor_lg(std::uint64_t x)
{
    if (x == 0) throw std::invalid_argument("lg of 0");
    return std::bit_width(x) - 1;
}

int
ceil_lg(std::uint64_t x)
{
    if (x == 0) throw std::invalid_argument("lg of 0");
    return x == 1 ? 0 : std::bit_width(x - 1);
}

std::uint64_t
binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; split the division to stay in range
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t factor = (n - k + i) / (i / g);
        r /= g;
        if (r > kSaturated / factor) throw std::overflow_error("binomial coefficient exceeds 64 bits");
        r *= factor;
    }
    return r;
}

std::uint64_t
lower_bound_recurrence(int l, int h)
{
    if (l < 1 || h < 1) throw std::invalid_argument("g(l, h) needs l >= 1 and h >= 1");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int)> g = [&](int ll, int hh) -> std::uint64_t {
        if (ll == 1) return 1;
        if (hh == 1) return static_cast<std::uint64_t>(ll);
        auto key = std::make_pair(ll, hh);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t sum = 0;
        for (int delta = 1; delta <= ll; ++delta) {
            std::uint64_t term = g(ll / delta, hh - 1);
            if (sum > kSaturated - term) throw std::overflow_error("g(l, h) exceeds 64 bits");
            sum += term;
        }
        return memo[key] = sum;
    };
    return g(l, h);
}

SizeBounds
size_bounds(int l, int h)
{
    if (l < 1 || h < 1) throw std::invalid_argument("size_bounds needs l >= 1 and h >= 1");
    SizeBounds b;
    b.g = lower_bound_recurrence(l, h);
    b.binom_lower = binomial(static_cast<std::uint64_t>(floor_lg(l) + h - 1), static_cast<std::uint64_t>(h - 1));
    std::uint64_t c = binomial(static_cast<std::uint64_t>(ceil_lg(l) + h + 1), static_cast<std::uint64_t>(h));
    std::uint64_t twice_l = 2 * static_cast<std::uint64_t>(l);
    if (c > kSaturated / twice_l) throw std::overflow_error("upper bound exceeds 64 bits");
    b.jl_upper = twice_l * c;
    return b;
}

// ---------------------------------------------------------------------------
// Exact minimum

std::uint64_t
min_universal_size(int l, int h, std::uint64_t cap)
{
    if (l < 1 || h < 1) throw std::invalid_argument("min_universal_size needs l >= 1 and h >= 1");
    if (h == 1 || l == 1) return h == 1 ? static_cast<std::uint64_t>(l) : 1;

    // Obligations: full-depth height-(h-1) trees with at most l leaves.
    std::vector<TreeShape> tests;
    std::vector<int> test_leaves;
    for (int k = 1; k <= l; ++k) {
        for (auto& t : enumerate_trees(k, h - 1, cap)) {
            tests.push_back(std::move(t));
            test_leaves.push_back(k);
        }
    }
    if (tests.size() > 64) throw CapExceeded("min_universal_size: more than 64 obligation trees");
    std::vector<OrderedTree> test_trees;
    for (const auto& t : tests) test_trees.emplace_back(t);

    // Candidate root children: each tree of height h-1 up to the succinct
    // size (which already hosts every obligation), reduced to its embedding
    // mask with the cheapest cost, then to the Pareto frontier.
    const std::uint64_t bound = succinct_leaf_count(l, h - 1);
    std::uint64_t candidates = 0;
    for (std::uint64_t k = 1; k <= bound; ++k) candidates = sat_add(candidates, count_trees(static_cast<int>(k), h - 1));
    if (candidates > cap) {
        throw CapExceeded("min_universal_size(" + std::to_string(l) + "," + std::to_string(h) + ") needs " +
                          std::to_string(candidates) + " candidate subtrees, cap is " + std::to_string(cap));
    }
    std::unordered_map<std::uint64_t, std::uint64_t> best;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        for (const auto& c : enumerate_trees(static_cast<int>(k), h - 1, cap)) {
            OrderedTree ct(c);
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < test_trees.size(); ++i)
                if (embeds(test_trees[i], ct)) mask |= std::uint64_t{1} << i;
            if (mask == 0) continue;
            auto [it, fresh] = best.emplace(mask, k);
            if (!fresh) it->second = std::min(it->second, k);
        }
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> kinds;  // (mask, cost)
    for (auto [mask, cost] : best) {
        bool dominated = false;
        for (auto [m2, c2] : best) {
            if (m2 != mask && (m2 & mask) == mask && c2 <= cost) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kinds.emplace_back(mask, cost);
    }
    std::sort(kinds.begin(), kinds.end());

    // State: for each obligation tree t, the fewest leaves already consumed
    // by a test whose next root child is t (kNone if there is no such test).
    // Fewer consumed leaves leave a longer tail to host, so the minimum
    // subsumes every larger value.
    constexpr unsigned char kNone = 0xff;
    const int tcount = static_cast<int>(tests.size());
    auto spawn = [&](std::string& into, int used) {
        for (int t = 0; t < tcount; ++t) {
            if (used + test_leaves[t] <= l) {
                auto& slot = reinterpret_cast<unsigned char&>(into[t]);
                slot = std::min<unsigned char>(slot, static_cast<unsigned char>(used));
            }
        }
    };

    // A pending (used, t) still has to host t and then every sequence with
    // l - used - leaves(t) leaves, which alone costs the smaller minimum.
    std::vector<std::uint64_t> host_cost(tcount, std::numeric_limits<std::uint64_t>::max());
    for (auto [mask, cost] : kinds)
        for (int t = 0; t < tcount; ++t)
            if ((mask >> t) & 1u) host_cost[t] = std::min(host_cost[t], cost);
    std::vector<std::uint64_t> smaller(l, 0);
    for (int r = 1; r < l; ++r) smaller[r] = min_universal_size(r, h, cap);
    auto estimate = [&](const std::string& state) {
        std::uint64_t est = 0;
        for (int t = 0; t < tcount; ++t) {
            auto used = static_cast<unsigned char>(state[t]);
            if (used != kNone) est = std::max(est, host_cost[t] + smaller[l - used - test_leaves[t]]);
        }
        return est;
    };

    std::string start(tcount, static_cast<char>(kNone));
    spawn(start, 0);
    const std::string goal(tcount, static_cast<char>(kNone));

    std::unordered_map<std::string, std::uint64_t> dist;
    using Item = std::tuple<std::uint64_t, std::uint64_t, std::string>;  // (estimate, cost, state)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[start] = 0;
    queue.push({estimate(start), 0, start});
    while (!queue.empty()) {
        auto [bound, cost, state] = queue.top();
        queue.pop();
        if (dist[state] < cost) continue;
        if (state == goal) return cost;
        if (dist.size() > cap) throw CapExceeded("min_universal_size: search space exceeds cap");
        for (auto [mask, kind_cost] : kinds) {
            std::string next(tcount, static_cast<char>(kNone));
            bool progress = false;
            for (int t = 0; t < tcount; ++t) {
                auto used = static_cast<unsigned char>(state[t]);
                if (used == kNone || ((mask >> t) & 1u) == 0) continue;
                progress = true;
                spawn(next, used + test_leaves[t]);
            }
            if (!progress) continue;
            for (int t = 0; t < tcount; ++t) {
                auto used = static_cast<unsigned char>(state[t]);
                if (used != kNone && ((mask >> t) & 1u) == 0) {
                    auto& slot = reinterpret_cast<unsigned char&>(next[t]);
                    slot = std::min(slot, used);
                }
            }
            std::uint64_t nc = cost + kind_cost;
            auto it = dist.find(next);
            if (it == dist.end() || nc < it->second) {
                dist[next] = nc;
                std::uint64_t est = nc + estimate(next);
                queue.push({est, nc, std::move(next)});
            }
        }
    }
    throw std::logic_error("min_universal_size: no universal tree found");
}

TreeShape
pad_to_depth(const TreeShape& tree, int h)
{
    std::function<TreeShape(const TreeShape&, int)> rec = [&](const TreeShape& t, int depth) {
        if (t.is_leaf()) return TreeShape::path(std::max(0, h - depth));
        TreeShape out;
        for (const auto& c : t.children) out.children.push_back(rec(c, depth + 1));
        return out;
    };
    return rec(tree, 0);
}

} // namespace parsep
