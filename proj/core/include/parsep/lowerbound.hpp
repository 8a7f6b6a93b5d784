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

#include "parsep/automata.hpp"
#include "parsep/game.hpp"
#include "parsep/trees.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace parsep {

/// Drops unreachable states and merges states only reachable through the sink.
SafetyAutomaton make_accessible(const SafetyAutomaton& a);

/// True iff every non-rejecting state is reachable from the initial state.
bool is_accessible(const SafetyAutomaton& a);

/**
 * A reject-free run from the initial state into a cycle whose largest
 * letter is odd: the automaton accepts `lasso`, which is won by Odd.
 */
struct OddCycleWitness
{
    Lasso lasso;
    std::vector<int> cycle_states;
};

/**
 * Per state of `class_states`, the largest number of p_odd-letters on a
 * path in the sub-automaton of letters <= p_odd that stays inside the
 * class (-1 outside the class). Any cycle with an odd maximum yields a
 * witness instead.
 */
std::variant<std::vector<int>, OddCycleWitness> resistance(const SafetyAutomaton& a,
                                                            std::span<const int> class_states, int p_odd);

/**
 * Nested linear quasi-orders on the non-rejecting states, one per odd
 * level j = 1, 3, ..., d+1. Level j is stored at index (j-1)/2 as a class
 * rank per state (-1 for the sink); ranks increase with the order.
 */
struct TreeDecomposition
{
    int d = 0;
    std::vector<std::vector<int>> class_of;
    std::vector<int> class_count;
    /// parent[k][c]: the class at level k+1 containing class c of level k.
    std::vector<std::vector<int>> parent;

    int level_index(int j) const { return (j - 1) / 2; }
};

/**
 * Builds the decomposition top-down, splitting each class by resistance.
 * `a` must be accessible and read letters 1..d.
 */
std::variant<TreeDecomposition, OddCycleWitness> extract_decomposition(const SafetyAutomaton& a, int d);

/// Empty if the decomposition conditions hold, else a description of the first violation.
std::optional<std::string> verify_decomposition(const SafetyAutomaton& a, const TreeDecomposition& dec);

struct DTree
{
    OrderedTree tree;
    /// For each leaf rank, the lowest-numbered state of its finest class.
    std::vector<int> leaf_state;
};

DTree d_tree(const SafetyAutomaton& a, const TreeDecomposition& dec);

/**
 * Even graph on the leaves of t (vertex i = leaf rank i). Leaves i < j whose
 * deepest common ancestor sits at depth d/2 - k get edges i -> j of priority
 * 2k and j -> i of priority 2k - 1; every vertex has self-loops of all even
 * priorities.
 */
GameGraph build_gt(const OrderedTree& t, int d);

/// Length of alpha for the root of t, saturating at UINT64_MAX.
std::uint64_t alpha_length(const OrderedTree& t, std::uint64_t repetition);

/**
 * Streams alpha_root . 2^omega for t together with a path of build_gt(t)
 * reading it. The path starts at the last leaf.
 */
class AlphaStream
{
public:
    struct Step
    {
        int letter;
        int vertex;  ///< vertex reached by this letter
    };

    AlphaStream(const OrderedTree& t, int d, std::uint64_t repetition);

    int start_vertex() const { return start_; }
    /// True once alpha_root has been read and only the 2^omega tail remains.
    bool in_tail() const { return position_ >= length_; }
    std::uint64_t position() const { return position_; }
    Step next();

private:
    enum class Kind : std::uint8_t { Alpha, Beta };
    struct Frame
    {
        int node;
        Kind kind;
        std::uint64_t counter;  ///< alpha: children left; beta: repetitions done
        bool pending;           ///< alpha: separator due; beta: closing letter due
    };

    int last_leaf(int node) const { return t_->leaf_range(node).second - 1; }
    int height_of(int node) const { return half_ - t_->depth(node); }

    const OrderedTree* t_;
    int half_;
    std::uint64_t repetition_;
    int start_;
    int vertex_;
    std::uint64_t position_ = 0;
    std::uint64_t length_ = 0;
    std::vector<Frame> stack_;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

struct SectionReport
{
    std::string name;
    Verdict status = Verdict::Pass;
    std::uint64_t checked = 0;
    /// Streams cut off by the letter budget before alpha_root ended.
    std::uint64_t truncated = 0;
    std::optional<Lasso> witness;
    std::string note;
};

struct ValidationReport
{
    Verdict verdict = Verdict::Pass;
    std::vector<SectionReport> sections;
};

struct ValidationOptions
{
    int graphs = 20;
    int lassos_per_graph = 50;
    int random_odd = 200;
    std::uint64_t budget = 1'000'000;
    /// 0 uses the number of states of the automaton.
    std::uint64_t repetition = 0;
    std::uint64_t seed = 0;
};

/**
 * Empirical separator check: (a) accepts closed-walk lassos of random even
 * graphs and of build_gt(t) for every full-depth t with <= n leaves, (b)
 * never rejects a prefix of an alpha_t stream within the budget, (c)
 * rejects every lasso with period length <= 3 and odd period maximum, and
 * random ones. A pass is evidence, not proof.
 */
ValidationReport validate_separator(const SafetyAutomaton& a, int n, int d, const ValidationOptions& options = {});

struct LowerBoundReport
{
    bool separator = true;
    std::optional<OddCycleWitness> witness;
    std::optional<std::string> decomposition_error;
    int leaves = 0;       ///< L, leaves of the D-tree
    int live_states = 0;  ///< Q, non-rejecting states after make_accessible
    std::uint64_t bound = 0;  ///< B = C(floor(lg n) + d/2 - 1, floor(lg n))
    std::uint64_t g = 0;
    std::optional<bool> universal;
    std::vector<std::string> failures;

    bool ok() const { return separator && !decomposition_error && failures.empty(); }
};

/**
 * Extracts the D-tree of `a` and compares its size with the bounds. L <= Q is
 * always checked; L >= g >= B only when `validated` and the D-tree is
 * universal.
 */
LowerBoundReport lower_bound_report(const SafetyAutomaton& a, int n, int d, bool validated,
                                    std::uint64_t cap = kDefaultEnumerationCap);

} // namespace parsep
