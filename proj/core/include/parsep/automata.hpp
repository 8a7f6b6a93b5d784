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

#include "parsep/game.hpp"
#include "parsep/trees.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace parsep {

inline constexpr std::uint64_t kDefaultStateCap = 20'000'000;

/// A transition of a safety automaton, as supplied by a caller.
struct Transition
{
    int from;
    int letter;
    int to;
};

/**
 * Safety automaton over the letters 1..alphabet(). Rejecting states are
 * merged into one absorbing sink, which is always the last state; missing
 * transitions are completed to the sink so the relation is total.
 */
class SafetyAutomaton
{
public:
    SafetyAutomaton() = default;
    /**
     * `rejecting` lists states to merge into the sink; surviving states are
     * renumbered in increasing order. `names` may be empty.
     */
    SafetyAutomaton(int states, int alphabet, int initial, std::span<const int> rejecting,
                    std::span<const Transition> transitions, std::vector<std::string> names = {});

    /// Number of states including the sink.
    int size() const { return states_; }
    int alphabet() const { return alphabet_; }
    int initial() const { return initial_; }
    int reject() const { return states_ - 1; }
    bool is_rejecting(int q) const { return q == reject(); }
    bool deterministic() const { return deterministic_; }

    std::span<const int> successors(int q, int letter) const
    {
        std::size_t k = slot(q, letter);
        return {targets_.data() + offsets_[k], targets_.data() + offsets_[k + 1]};
    }
    /// The unique successor; only meaningful when deterministic().
    int step(int q, int letter) const { return targets_[offsets_[slot(q, letter)]]; }

    std::size_t transition_count() const { return targets_.size(); }
    /// Explicit transitions, sink self-loops included.
    std::vector<Transition> transitions() const;

    const std::string& name(int q) const { return names_[q]; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::size_t slot(int q, int letter) const
    {
        return static_cast<std::size_t>(q) * alphabet_ + static_cast<std::size_t>(letter - 1);
    }

    int states_ = 1;
    int alphabet_ = 2;
    int initial_ = 0;
    bool deterministic_ = true;
    std::vector<std::uint32_t> offsets_;
    std::vector<int> targets_;
    std::vector<std::string> names_;
};

struct PriorityMove
{
    int priority;
    int to;

    friend bool operator==(const PriorityMove&, const PriorityMove&) = default;
};

/// Nondeterministic parity automaton with transition priorities in 1..priority_bound().
class ParityAutomaton
{
public:
    ParityAutomaton() = default;
    /// moves[q * alphabet + letter - 1] lists the transitions on (q, letter).
    ParityAutomaton(int alphabet, int priority_bound, int initial, std::vector<std::vector<PriorityMove>> moves,
                    std::vector<std::string> names = {});

    int size() const { return static_cast<int>(moves_.size()) / alphabet_; }
    int alphabet() const { return alphabet_; }
    int priority_bound() const { return priority_bound_; }
    int initial() const { return initial_; }
    std::span<const PriorityMove> moves(int q, int letter) const
    {
        return moves_[static_cast<std::size_t>(q) * alphabet_ + letter - 1];
    }
    const std::string& name(int q) const { return names_[q]; }

private:
    int alphabet_ = 2;
    int priority_bound_ = 2;
    int initial_ = 0;
    std::vector<std::vector<PriorityMove>> moves_;
    std::vector<std::string> names_;
};

/**
 * Counter automaton over states <c_{d-1}, ..., c_3, c_1> with 0 <= c_p <= n.
 * Even p resets the counters below p to n; odd p decrements c_p, resets the
 * ones below to n, and rejects when c_p is already 0.
 */
SafetyAutomaton counter_separator(int n, int d, std::uint64_t cap = kDefaultStateCap);

/**
 * Tree automaton on the leaves of T (height d/2, full depth), initial state
 * the largest leaf. Even p moves to the largest leaf with the same
 * p-truncation, odd p to the largest leaf with a smaller one.
 */
SafetyAutomaton tree_separator(const OrderedTree& tree, int d);

/// Number of registers, floor(1 + lg n).
int register_count(int n);

/**
 * Register automaton over non-increasing register sequences
 * <r_m, ..., r_1> with values in 1..d, initially all 1. Each letter has a
 * non-reset transition of priority 1 and, per register k, a reset of
 * priority 2k or 2k+1 depending on the parity of the updated r_k.
 */
ParityAutomaton register_automaton(int n, int d, std::uint64_t cap = kDefaultStateCap);

/**
 * Safety automaton reading letters of R and feeding R's transition
 * priorities to the deterministic automaton S. A pair is rejecting iff its
 * S component is, so all such pairs collapse into the sink and the product
 * has |R| * (|S| - 1) + 1 states.
 */
SafetyAutomaton product_parity_safety(const ParityAutomaton& r, const SafetyAutomaton& s,
                                      std::uint64_t cap = kDefaultStateCap);

/// Is there an infinite run on prefix . period^omega that never rejects?
bool accepts_lasso(const SafetyAutomaton& a, const Lasso& w);

/// States visited by a deterministic automaton on a finite word, starting with the initial state.
std::vector<int> run_det(const SafetyAutomaton& a, std::span<const int> word);

/// Tracks the set of non-rejecting states reachable on the letters fed so far.
class SubsetRun
{
public:
    explicit SubsetRun(const SafetyAutomaton& a);

    /// Returns false once every run has rejected.
    bool step(int letter);
    bool alive() const { return !current_.empty(); }
    std::span<const int> states() const { return current_; }

private:
    const SafetyAutomaton* a_;
    std::vector<int> current_, next_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
};

} // namespace parsep
