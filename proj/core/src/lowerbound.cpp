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

#include "parsep/lowerbound.hpp"

#include "parsep/errors.hpp"
#include "parsep/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace parsep {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::vector<char>
reachable_live(const SafetyAutomaton& a)
{
    std::vector<char> seen(a.size(), 0);
    if (a.is_rejecting(a.initial())) return seen;
    std::vector<int> queue{a.initial()};
    seen[a.initial()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int q = queue[i];
        for (int p = 1; p <= a.alphabet(); ++p) {
            for (int t : a.successors(q, p)) {
                if (a.is_rejecting(t) || seen[t]) continue;
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

/// Letters of a shortest reject-free run from the initial state to `target`.
Word
path_to(const SafetyAutomaton& a, int target)
{
    std::vector<int> via_state(a.size(), -2), via_letter(a.size(), 0);
    std::vector<int> queue{a.initial()};
    via_state[a.initial()] = -1;
    for (std::size_t i = 0; i < queue.size() && via_state[target] == -2; ++i) {
        int q = queue[i];
        for (int p = 1; p <= a.alphabet(); ++p) {
            for (int t : a.successors(q, p)) {
                if (a.is_rejecting(t) || via_state[t] != -2) continue;
                via_state[t] = q;
                via_letter[t] = p;
                queue.push_back(t);
            }
        }
    }
    if (via_state[target] == -2) throw std::invalid_argument("automaton is not accessible");
    Word w;
    for (int q = target; via_state[q] >= 0; q = via_state[q]) w.push_back(via_letter[q]);
    std::reverse(w.begin(), w.end());
    return w;
}

void
check_full_depth(const OrderedTree& t, int d)
{
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("d must be even and >= 2");
    if (t.height() != d / 2 || !t.full_depth()) {
        throw std::invalid_argument("tree must have every leaf at depth d/2 = " + std::to_string(d / 2));
    }
}

} // namespace

SafetyAutomaton
make_accessible(const SafetyAutomaton& a)
{
    auto seen = reachable_live(a);
    std::vector<int> rejecting;
    for (int q = 0; q < a.size(); ++q)
        if (!seen[q]) rejecting.push_back(q);
    auto trans = a.transitions();
    return SafetyAutomaton(a.size(), a.alphabet(), a.initial(), rejecting, trans, a.names());
}

bool
is_accessible(const SafetyAutomaton& a)
{
    auto seen = reachable_live(a);
    for (int q = 0; q < a.reject(); ++q)
        if (!seen[q]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Decomposition

std::variant<std::vector<int>, OddCycleWitness>
resistance(const SafetyAutomaton& a, std::span<const int> class_states, int p_odd)
{
    if (p_odd < 1 || p_odd % 2 == 0) throw std::invalid_argument("resistance needs an odd priority");
    const int k = static_cast<int>(class_states.size());
    std::vector<int> local(a.size(), -1);
    for (int i = 0; i < k; ++i) {
        int q = class_states[i];
        if (q < 0 || q >= a.size() || a.is_rejecting(q)) throw std::invalid_argument("class contains a rejecting state");
        local[q] = i;
    }
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        for (int p = 1; p <= std::min(p_odd, a.alphabet()); ++p)
            for (int t : a.successors(class_states[i], p))
                if (local[t] >= 0) edges.push_back({i, local[t], p});
    }
    GameGraph sub(k, edges);

    if (auto cycle = find_cycle(sub, Player::Odd)) {
        OddCycleWitness w;
        for (int e : *cycle) {
            w.lasso.period.push_back(sub.edge(e).priority);
            w.cycle_states.push_back(class_states[sub.edge(e).src]);
        }
        w.lasso.prefix = path_to(a, w.cycle_states.front());
        return w;
    }

    std::vector<Digraph::Arc> arcs;
    for (const auto& e : edges) arcs.push_back({e.src, e.dst});
    Digraph graph(k, arcs);
    auto scc = strongly_connected_components(graph);
    std::vector<std::vector<int>> members(scc.count);
    for (int i = 0; i < k; ++i) members[scc.component[i]].push_back(i);
    // arcs leave a component towards lower ids, so ascending ids are ready in order
    std::vector<int> best(scc.count, 0);
    for (int c = 0; c < scc.count; ++c) {
        for (int i : members[c]) {
            for (int arc : graph.out_arcs(i)) {
                int j = graph.target(arc);
                int cj = scc.component[j];
                if (cj == c) continue;
                best[c] = std::max(best[c], best[cj] + (edges[arc].priority == p_odd ? 1 : 0));
            }
        }
    }
    std::vector<int> out(a.size(), -1);
    for (int i = 0; i < k; ++i) out[class_states[i]] = best[scc.component[i]];
    return out;
}

std::variant<TreeDecomposition, OddCycleWitness>
extract_decomposition(const SafetyAutomaton& a, int d)
{
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("d must be even and >= 2");
    if (a.alphabet() != d) {
        throw std::invalid_argument("automaton reads 1.." + std::to_string(a.alphabet()) + ", expected 1.." +
                                    std::to_string(d));
    }
    if (!is_accessible(a)) throw std::invalid_argument("automaton is not accessible");

    const int levels = d / 2 + 1;
    const int live = a.reject();
    TreeDecomposition dec;
    dec.d = d;
    dec.class_of.assign(levels, std::vector<int>(a.size(), -1));
    dec.class_count.assign(levels, 0);
    dec.parent.assign(levels, {});
    for (int q = 0; q < live; ++q) dec.class_of[levels - 1][q] = 0;
    dec.class_count[levels - 1] = live > 0 ? 1 : 0;

    for (int k = levels - 2; k >= 0; --k) {
        const int j = 2 * k + 1;
        std::vector<std::vector<int>> members(dec.class_count[k + 1]);
        for (int q = 0; q < live; ++q) members[dec.class_of[k + 1][q]].push_back(q);
        std::vector<std::pair<std::pair<int, int>, int>> keyed;  // ((parent class, resistance), state)
        for (int c = 0; c < static_cast<int>(members.size()); ++c) {
            auto r = resistance(a, members[c], j);
            if (auto* w = std::get_if<OddCycleWitness>(&r)) return std::move(*w);
            const auto& values = std::get<std::vector<int>>(r);
            for (int q : members[c]) keyed.push_back({{c, values[q]}, q});
        }
        std::sort(keyed.begin(), keyed.end());
        int rank = -1;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) {
                ++rank;
                dec.parent[k].push_back(keyed[i].first.first);
            }
            dec.class_of[k][keyed[i].second] = rank;
        }
        dec.class_count[k] = rank + 1;
    }
    return dec;
}

std::optional<std::string>
verify_decomposition(const SafetyAutomaton& a, const TreeDecomposition& dec)
{
    const int d = dec.d;
    const int levels = d / 2 + 1;
    const int live = a.reject();
    if (static_cast<int>(dec.class_of.size()) != levels || static_cast<int>(dec.parent.size()) != levels) {
        return "wrong number of levels";
    }
    if (live > 0 && dec.class_count[levels - 1] != 1) return "top level must be a single class";
    for (int k = 0; k < levels; ++k) {
        if (static_cast<int>(dec.class_of[k].size()) != a.size()) return "class table size mismatch";
        for (int q = 0; q < live; ++q) {
            int c = dec.class_of[k][q];
            if (c < 0 || c >= dec.class_count[k]) return "state " + std::to_string(q) + " lacks a class";
            if (k + 1 < levels && dec.parent[k][c] != dec.class_of[k + 1][q]) {
                return "level " + std::to_string(2 * k + 1) + " does not refine level " + std::to_string(2 * k + 3);
            }
        }
        if (k + 1 < levels) {
            if (static_cast<int>(dec.parent[k].size()) != dec.class_count[k]) return "parent table size mismatch";
            if (!std::is_sorted(dec.parent[k].begin(), dec.parent[k].end())) {
                return "class order at level " + std::to_string(2 * k + 1) + " disagrees with its parent level";
            }
        }
    }
    for (int q = 0; q < live; ++q) {
        for (int p = 1; p <= a.alphabet(); ++p) {
            for (int t : a.successors(q, p)) {
                if (a.is_rejecting(t)) continue;
                for (int k = 0; k < levels; ++k) {
                    const int j = 2 * k + 1;
                    int from = dec.class_of[k][q], to = dec.class_of[k][t];
                    if (p < j && to > from) {
                        return "letter " + std::to_string(p) + " increases level " + std::to_string(j) + " from state " +
                               a.name(q) + " to " + a.name(t);
                    }
                    if (p % 2 == 1 && j <= p && to >= from) {
                        return "odd letter " + std::to_string(p) + " does not decrease level " + std::to_string(j) +
                               " from state " + a.name(q) + " to " + a.name(t);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

DTree
d_tree(const SafetyAutomaton& a, const TreeDecomposition& dec)
{
    const int levels = dec.d / 2 + 1;
    OrderedTree::Builder b;
    std::vector<std::vector<int>> node_of(levels);
    node_of[levels - 1].assign(dec.class_count[levels - 1], b.root());
    for (int k = levels - 2; k >= 0; --k) {
        for (int c = 0; c < dec.class_count[k]; ++c) node_of[k].push_back(b.add_child(node_of[k + 1][dec.parent[k][c]]));
    }
    DTree out{std::move(b).build(), {}};

    std::vector<int> representative(dec.class_count[0], -1);
    for (int q = a.reject() - 1; q >= 0; --q) representative[dec.class_of[0][q]] = q;
    std::vector<int> class_of_node(out.tree.node_count(), -1);
    for (int c = 0; c < dec.class_count[0]; ++c) class_of_node[node_of[0][c]] = c;
    for (int r = 0; r < out.tree.leaf_count(); ++r) {
        int c = class_of_node[out.tree.leaf_node(r)];
        out.leaf_state.push_back(c >= 0 ? representative[c] : -1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Adversarial family

GameGraph
build_gt(const OrderedTree& t, int d)
{
    check_full_depth(t, d);
    const int n = t.leaf_count();
    std::vector<std::vector<int>> paths(n);
    for (int i = 0; i < n; ++i) paths[i] = t.leaf_path(i);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int p = 2; p <= d; p += 2) edges.push_back({i, i, p});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto [a, b] = std::mismatch(paths[i].begin(), paths[i].end(), paths[j].begin());
            int common = static_cast<int>(a - paths[i].begin());
            int p = d - 2 * common;
            edges.push_back({i, j, p});
            edges.push_back({j, i, p - 1});
        }
    }
    return GameGraph(n, std::move(edges), d);
}

std::uint64_t
alpha_length(const OrderedTree& t, std::uint64_t repetition)
{
    auto add = [](std::uint64_t x, std::uint64_t y) { return x > kSaturated - y ? kSaturated : x + y; };
    auto mul = [](std::uint64_t x, std::uint64_t y) {
        if (x == 0 || y == 0) return std::uint64_t{0};
        return x > kSaturated / y ? kSaturated : x * y;
    };
    // children have larger ids than parents, so a reverse sweep is bottom-up
    const int n = t.node_count();
    std::vector<std::uint64_t> alpha(n, 0), beta(n, 0);
    for (int v = n - 1; v >= 0; --v) {
        auto ch = t.children(v);
        if (ch.empty()) continue;
        std::uint64_t a = ch.size() - 1;
        for (int c : ch) a = add(a, beta[c]);
        alpha[v] = a;
        beta[v] = mul(repetition, add(a, 1));
    }
    return alpha[0];
}

AlphaStream::AlphaStream(const OrderedTree& t, int d, std::uint64_t repetition)
    : t_(&t), half_(d / 2), repetition_(repetition)
{
    check_full_depth(t, d);
    if (repetition < 1) throw std::invalid_argument("repetition must be >= 1");
    start_ = vertex_ = t.leaf_count() - 1;
    length_ = alpha_length(t, repetition);
    stack_.push_back({0, Kind::Alpha, t.children(0).size(), false});
}

AlphaStream::Step
AlphaStream::next()
{
    ++position_;
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        if (f.kind == Kind::Alpha) {
            if (f.pending) {
                // move from the last leaf of one child to the last leaf of its left sibling
                f.pending = false;
                int sibling = t_->children(f.node)[f.counter - 1];
                vertex_ = last_leaf(sibling);
                return {2 * height_of(f.node) - 1, vertex_};
            }
            if (f.counter == 0) {
                stack_.pop_back();
                continue;
            }
            int child = t_->children(f.node)[--f.counter];
            f.pending = f.counter > 0;
            if (!t_->is_leaf(child)) stack_.push_back({child, Kind::Beta, 0, false});
            continue;
        }
        if (f.pending) {
            f.pending = false;
            ++f.counter;
            vertex_ = last_leaf(f.node);
            return {2 * height_of(f.node), vertex_};
        }
        if (f.counter == repetition_) {
            stack_.pop_back();
            continue;
        }
        f.pending = true;
        int node = f.node;
        stack_.push_back({node, Kind::Alpha, t_->children(node).size(), false});
    }
    return {2, vertex_};
}

// ---------------------------------------------------------------------------
// Validation

std::string_view
to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "PASS";
    case Verdict::Fail:
        return "FAIL";
    case Verdict::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

std::vector<OrderedTree>
tree_family(int n, int d)
{
    std::vector<OrderedTree> out;
    for (int k = 1; k <= n; ++k)
        for (const auto& s : enumerate_trees(k, d / 2)) out.emplace_back(s);
    return out;
}

/// alpha_root with one repetition, then 2^omega.
Lasso
short_alpha_lasso(const OrderedTree& t, int d)
{
    AlphaStream stream(t, d, 1);
    Lasso w;
    while (!stream.in_tail()) w.prefix.push_back(stream.next().letter);
    w.period = {2};
    return w;
}

} // namespace

ValidationReport
validate_separator(const SafetyAutomaton& a, int n, int d, const ValidationOptions& options)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("d must be even and >= 2");
    if (a.alphabet() != d) {
        throw std::invalid_argument("automaton reads 1.." + std::to_string(a.alphabet()) + ", expected 1.." +
                                    std::to_string(d));
    }
    std::mt19937_64 rng(options.seed);
    const auto trees = tree_family(n, d);
    ValidationReport report;

    SectionReport even;
    even.name = "even-lassos";
    auto expect_accept = [&](const Lasso& w) {
        ++even.checked;
        if (even.status != Verdict::Fail && !accepts_lasso(a, w)) {
            even.status = Verdict::Fail;
            even.witness = w;
        }
    };
    for (const auto& t : trees) {
        expect_accept(short_alpha_lasso(t, d));
        for (const auto& w : sample_closed_walk_lassos(build_gt(t, d), 10, rng())) expect_accept(w);
    }
    for (int g = 0; g < options.graphs; ++g) {
        GameGraph graph = random_even_graph(n, d, rng);
        for (const auto& w : sample_closed_walk_lassos(graph, options.lassos_per_graph, rng())) expect_accept(w);
    }
    report.sections.push_back(std::move(even));

    SectionReport alpha;
    alpha.name = "alpha-prefixes";
    const std::uint64_t r = options.repetition ? options.repetition : static_cast<std::uint64_t>(a.size());
    for (const auto& t : trees) {
        ++alpha.checked;
        AlphaStream stream(t, d, r);
        SubsetRun run(a);
        const std::uint64_t length = alpha_length(t, r);
        const bool cut = length > options.budget;
        const std::uint64_t want = cut ? options.budget : length + static_cast<std::uint64_t>(d);
        Word consumed;
        bool alive = run.alive();
        while (alive && consumed.size() < want) {
            auto step = stream.next();
            consumed.push_back(step.letter);
            alive = run.step(step.letter);
        }
        if (!alive) {
            alpha.status = Verdict::Fail;
            alpha.note = "rejected after " + std::to_string(consumed.size()) + " letters";
            alpha.witness = Lasso{std::move(consumed), {2}};
            break;
        }
        if (cut) ++alpha.truncated;
    }
    if (alpha.status != Verdict::Fail && alpha.truncated > 0) {
        alpha.status = Verdict::Inconclusive;
        alpha.note = std::to_string(alpha.truncated) + " streams cut at " + std::to_string(options.budget) + " letters";
    }
    report.sections.push_back(std::move(alpha));

    SectionReport odd;
    odd.name = "odd-lassos";
    auto expect_reject = [&](const Lasso& w) {
        ++odd.checked;
        if (odd.status != Verdict::Fail && accepts_lasso(a, w)) {
            odd.status = Verdict::Fail;
            odd.witness = w;
        }
    };
    for (int len = 1; len <= 3; ++len) {
        Word period(len, 1);
        while (true) {
            if (*std::max_element(period.begin(), period.end()) % 2 == 1) expect_reject(Lasso{{}, period});
            int i = len - 1;
            while (i >= 0 && period[i] == d) period[i--] = 1;
            if (i < 0) break;
            ++period[i];
        }
    }
    for (int i = 0; i < options.random_odd; ++i) {
        std::uniform_int_distribution<int> odd_top(0, d / 2 - 1), prefix_len(0, 3), period_len(1, 6);
        const int top = 2 * odd_top(rng) + 1;
        Lasso w;
        std::uniform_int_distribution<int> any(1, d), below(1, top);
        for (int k = prefix_len(rng); k > 0; --k) w.prefix.push_back(any(rng));
        for (int k = period_len(rng); k > 0; --k) w.period.push_back(below(rng));
        std::uniform_int_distribution<std::size_t> pos(0, w.period.size() - 1);
        w.period[pos(rng)] = top;
        expect_reject(w);
    }
    report.sections.push_back(std::move(odd));

    for (const auto& s : report.sections) {
        if (s.status == Verdict::Fail) report.verdict = Verdict::Fail;
        else if (s.status == Verdict::Inconclusive && report.verdict == Verdict::Pass) report.verdict = Verdict::Inconclusive;
    }
    return report;
}

LowerBoundReport
lower_bound_report(const SafetyAutomaton& a, int n, int d, bool validated, std::uint64_t cap)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    LowerBoundReport rep;
    const int lg = floor_lg(static_cast<std::uint64_t>(n));
    rep.bound = binomial(static_cast<std::uint64_t>(lg + d / 2 - 1), static_cast<std::uint64_t>(lg));
    rep.g = lower_bound_recurrence(n, d / 2);

    SafetyAutomaton acc = make_accessible(a);
    rep.live_states = acc.reject();
    auto dec = extract_decomposition(acc, d);
    if (auto* w = std::get_if<OddCycleWitness>(&dec)) {
        rep.separator = false;
        rep.witness = std::move(*w);
        return rep;
    }
    const auto& decomposition = std::get<TreeDecomposition>(dec);
    rep.decomposition_error = verify_decomposition(acc, decomposition);
    DTree dt = d_tree(acc, decomposition);
    rep.leaves = dt.tree.leaf_count();
    try {
        rep.universal = is_universal(dt.tree, n, d / 2, cap);
    } catch (const CapExceeded&) {
        rep.universal.reset();
    }
    if (rep.leaves > rep.live_states) rep.failures.push_back("D-tree has more leaves than live states");
    if (validated && rep.universal.value_or(false)) {
        if (static_cast<std::uint64_t>(rep.leaves) < rep.g) rep.failures.push_back("D-tree has fewer than g leaves");
        if (rep.g < rep.bound) rep.failures.push_back("g is below the binomial bound");
    }
    return rep;
}

} // namespace parsep
