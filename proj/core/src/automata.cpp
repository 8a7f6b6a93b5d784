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

#include "parsep/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace parsep {

namespace {

std::string
angle_list(std::span<const int> values)
{
    std::string s = "<";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s + ">";
}

void
check_d(int d)
{
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("d must be even and >= 2, got " + std::to_string(d));
}

} // namespace

// ---------------------------------------------------------------------------
// SafetyAutomaton

SafetyAutomaton::SafetyAutomaton(int states, int alphabet, int initial, std::span<const int> rejecting,
                                 std::span<const Transition> transitions, std::vector<std::string> names)
    : alphabet_(alphabet)
{
    if (states < 1) throw std::invalid_argument("automaton needs at least one state");
    if (alphabet < 1) throw std::invalid_argument("alphabet must be nonempty");
    if (initial < 0 || initial >= states) throw std::invalid_argument("initial state out of range");
    if (!names.empty() && static_cast<int>(names.size()) != states) {
        throw std::invalid_argument("names must cover every state");
    }

    std::vector<char> rej(states, 0);
    for (int q : rejecting) {
        if (q < 0 || q >= states) throw std::invalid_argument("rejecting state " + std::to_string(q) + " out of range");
        rej[q] = 1;
    }
    std::vector<int> remap(states);
    int kept = 0;
    for (int q = 0; q < states; ++q)
        if (!rej[q]) remap[q] = kept++;
    for (int q = 0; q < states; ++q)
        if (rej[q]) remap[q] = kept;
    states_ = kept + 1;
    initial_ = remap[initial];

    names_.resize(states_);
    for (int q = 0; q < states; ++q) {
        if (!rej[q]) names_[remap[q]] = names.empty() ? std::to_string(q) : std::move(names[q]);
    }
    names_.back() = "reject";

    const std::size_t slots = static_cast<std::size_t>(states_) * alphabet_;
    std::vector<std::uint32_t> count(slots + 1, 0);
    for (const auto& t : transitions) {
        if (t.from < 0 || t.from >= states || t.to < 0 || t.to >= states) {
            throw std::invalid_argument("transition endpoint out of range");
        }
        if (t.letter < 1 || t.letter > alphabet) {
            throw std::invalid_argument("transition letter " + std::to_string(t.letter) + " outside 1.." +
                                        std::to_string(alphabet));
        }
        if (rej[t.from]) continue;
        ++count[slot(remap[t.from], t.letter) + 1];
    }
    for (std::size_t k = 0; k < slots; ++k) count[k + 1] += count[k];
    std::vector<int> raw(count[slots]);
    {
        std::vector<std::uint32_t> fill(count.begin(), count.end() - 1);
        for (const auto& t : transitions) {
            if (rej[t.from]) continue;
            raw[fill[slot(remap[t.from], t.letter)]++] = remap[t.to];
        }
    }

    // Sort and dedupe each slot; a move into the sink is dropped when the
    // slot has another target, and an empty slot goes to the sink.
    const int sink = reject();
    offsets_.assign(slots + 1, 0);
    targets_.clear();
    targets_.reserve(raw.size() + static_cast<std::size_t>(alphabet_));
    for (std::size_t k = 0; k < slots; ++k) {
        auto first = raw.begin() + count[k], last = raw.begin() + count[k + 1];
        std::sort(first, last);
        last = std::unique(first, last);
        if (last - first > 1 && *(last - 1) == sink) --last;
        if (first == last) targets_.push_back(sink);
        else targets_.insert(targets_.end(), first, last);
        offsets_[k + 1] = static_cast<std::uint32_t>(targets_.size());
        if (offsets_[k + 1] - offsets_[k] != 1) deterministic_ = false;
    }
}

std::vector<Transition>
SafetyAutomaton::transitions() const
{
    std::vector<Transition> out;
    out.reserve(targets_.size());
    for (int q = 0; q < states_; ++q)
        for (int a = 1; a <= alphabet_; ++a)
            for (int t : successors(q, a)) out.push_back({q, a, t});
    return out;
}

// ---------------------------------------------------------------------------
// ParityAutomaton

ParityAutomaton::ParityAutomaton(int alphabet, int priority_bound, int initial,
                                 std::vector<std::vector<PriorityMove>> moves, std::vector<std::string> names)
    : alphabet_(alphabet), priority_bound_(priority_bound), initial_(initial), moves_(std::move(moves)),
      names_(std::move(names))
{
    if (alphabet < 1 || moves_.empty() || moves_.size() % alphabet != 0) {
        throw std::invalid_argument("parity automaton needs alphabet * states move lists");
    }
    const int n = size();
    if (initial < 0 || initial >= n) throw std::invalid_argument("initial state out of range");
    for (const auto& list : moves_) {
        if (list.empty()) throw std::invalid_argument("parity automaton transition relation must be total");
        for (auto m : list) {
            if (m.to < 0 || m.to >= n) throw std::invalid_argument("transition target out of range");
            if (m.priority < 1 || m.priority > priority_bound) {
                throw std::invalid_argument("transition priority outside 1.." + std::to_string(priority_bound));
            }
        }
    }
    if (names_.empty()) {
        for (int q = 0; q < n; ++q) names_.push_back(std::to_string(q));
    } else if (static_cast<int>(names_.size()) != n) {
        throw std::invalid_argument("names must cover every state");
    }
}

// ---------------------------------------------------------------------------
// Separators

SafetyAutomaton
counter_separator(int n, int d, std::uint64_t cap)
{
    if (n < 1) throw std::invalid_argument("counter_separator needs n >= 1");
    check_d(d);
    const int h = d / 2;
    std::uint64_t count = 1;
    for (int j = 0; j < h; ++j) {
        count *= static_cast<std::uint64_t>(n + 1);
        if (count + 1 > cap) {
            throw CapExceeded("counter_separator(" + std::to_string(n) + "," + std::to_string(d) +
                              ") exceeds the state cap of " + std::to_string(cap));
        }
    }
    const int states = static_cast<int>(count);
    const int reject = states;

    // counter j holds c_{2j+1}; state id = sum c_j (n+1)^j
    std::vector<int> weight(h, 1);
    for (int j = 1; j < h; ++j) weight[j] = weight[j - 1] * (n + 1);

    std::vector<Transition> trans;
    trans.reserve(static_cast<std::size_t>(states) * d);
    std::vector<std::string> names(states + 1);
    std::vector<int> c(h), shown(h);
    for (int id = 0; id < states; ++id) {
        for (int j = 0, rest = id; j < h; ++j, rest /= n + 1) c[j] = rest % (n + 1);
        for (int j = 0; j < h; ++j) shown[j] = c[h - 1 - j];
        names[id] = angle_list(shown);
        for (int p = 1; p <= d; ++p) {
            int to = id;
            int top = p % 2 == 0 ? p / 2 : (p - 1) / 2;  // counters below p
            if (p % 2 == 1) {
                if (c[top] == 0) {
                    trans.push_back({id, p, reject});
                    continue;
                }
                to -= weight[top];
            }
            for (int j = 0; j < top; ++j) to += (n - c[j]) * weight[j];
            trans.push_back({id, p, to});
        }
    }
    names[reject] = "reject";
    const int rejecting[] = {reject};
    return SafetyAutomaton(states + 1, d, states - 1, rejecting, trans, std::move(names));
}

SafetyAutomaton
tree_separator(const OrderedTree& tree, int d)
{
    check_d(d);
    if (tree.height() != d / 2 || !tree.full_depth()) {
        throw std::invalid_argument("tree_separator needs every leaf at depth d/2 = " + std::to_string(d / 2));
    }
    const int leaves = tree.leaf_count();
    const int reject = leaves;
    const int h = d / 2;
    std::vector<Transition> trans;
    trans.reserve(static_cast<std::size_t>(leaves) * d);
    std::vector<std::string> names(leaves + 1);
    std::vector<int> anc(h + 1);
    for (int s = 0; s < leaves; ++s) {
        int v = tree.leaf_node(s);
        for (int k = h; k >= 0; --k) {
            anc[k] = v;
            v = k > 0 ? tree.parent(v) : v;
        }
        names[s] = angle_list(tree.leaf_path(s));
        for (int p = 1; p <= d; ++p) {
            auto [lo, hi] = tree.leaf_range(anc[truncation_length(p, d)]);
            int to = p % 2 == 0 ? hi - 1 : (lo > 0 ? lo - 1 : reject);
            trans.push_back({s, p, to});
        }
    }
    names[reject] = "reject";
    const int rejecting[] = {reject};
    return SafetyAutomaton(leaves + 1, d, leaves - 1, rejecting, trans, std::move(names));
}

int
register_count(int n)
{
    if (n < 1) throw std::invalid_argument("register_count needs n >= 1");
    return std::bit_width(static_cast<unsigned>(n));
}

ParityAutomaton
register_automaton(int n, int d, std::uint64_t cap)
{
    check_d(d);
    const int m = register_count(n);

    // sequences are stored top register first: seq[0] = r_m, seq[m-1] = r_1
    std::vector<std::vector<int>> states;
    std::vector<int> seq(m, 1);
    std::function<void(int, int)> gen = [&](int pos, int max_value) {
        if (pos == m) {
            states.push_back(seq);
            if (states.size() > cap) {
                throw CapExceeded("register_automaton(" + std::to_string(n) + "," + std::to_string(d) +
                                  ") exceeds the state cap of " + std::to_string(cap));
            }
            return;
        }
        for (int v = 1; v <= max_value; ++v) {
            seq[pos] = v;
            gen(pos + 1, v);
        }
    };
    gen(0, d);

    auto key = [&](const std::vector<int>& s) {
        std::uint64_t k = 0;
        for (int v : s) k = k * static_cast<std::uint64_t>(d + 1) + static_cast<std::uint64_t>(v);
        return k;
    };
    std::unordered_map<std::uint64_t, int> id;
    for (int q = 0; q < static_cast<int>(states.size()); ++q) id.emplace(key(states[q]), q);

    std::vector<std::vector<PriorityMove>> moves(states.size() * d);
    std::vector<std::string> names;
    for (int q = 0; q < static_cast<int>(states.size()); ++q) {
        names.push_back(angle_list(states[q]));
        for (int p = 1; p <= d; ++p) {
            std::vector<int> upd = states[q];
            // registers r_1 .. r_{k-1} below the first one exceeding p take p
            for (int pos = m - 1; pos >= 0 && upd[pos] <= p; --pos) upd[pos] = p;
            auto& list = moves[static_cast<std::size_t>(q) * d + p - 1];
            list.push_back({1, id.at(key(upd))});
            for (int k = 1; k <= m; ++k) {
                int pos = m - k;
                int priority = upd[pos] % 2 == 0 ? 2 * k : 2 * k + 1;
                std::vector<int> reset = upd;
                reset.erase(reset.begin() + pos);
                reset.push_back(1);
                list.push_back({priority, id.at(key(reset))});
            }
        }
    }
    return ParityAutomaton(d, 2 * m + 1, 0, std::move(moves), std::move(names));
}

SafetyAutomaton
product_parity_safety(const ParityAutomaton& r, const SafetyAutomaton& s, std::uint64_t cap)
{
    if (!s.deterministic()) throw std::invalid_argument("product needs a deterministic safety automaton");
    if (s.alphabet() < r.priority_bound()) {
        throw std::invalid_argument("alphabet mismatch: safety automaton reads 1.." + std::to_string(s.alphabet()) +
                                    " but priorities reach " + std::to_string(r.priority_bound()));
    }
    const std::uint64_t live = static_cast<std::uint64_t>(s.size() - 1);
    const std::uint64_t states = static_cast<std::uint64_t>(r.size()) * live + 1;
    if (states > cap) {
        throw CapExceeded("product has " + std::to_string(states) + " states, cap is " + std::to_string(cap));
    }
    const int sink = static_cast<int>(states) - 1;
    auto pair_id = [&](int rq, int sq) {
        return sq == s.reject() ? sink : rq * static_cast<int>(live) + sq;
    };

    std::vector<Transition> trans;
    std::vector<std::string> names(states);
    for (int rq = 0; rq < r.size(); ++rq) {
        for (int sq = 0; sq < s.reject(); ++sq) {
            int from = pair_id(rq, sq);
            names[from] = "(" + r.name(rq) + "," + s.name(sq) + ")";
            for (int a = 1; a <= r.alphabet(); ++a)
                for (auto mv : r.moves(rq, a)) trans.push_back({from, a, pair_id(mv.to, s.step(sq, mv.priority))});
        }
    }
    names[sink] = "reject";
    const int rejecting[] = {sink};
    return SafetyAutomaton(static_cast<int>(states), r.alphabet(), pair_id(r.initial(), s.initial()), rejecting,
                           trans, std::move(names));
}

// ---------------------------------------------------------------------------
// Runs

bool
accepts_lasso(const SafetyAutomaton& a, const Lasso& w)
{
    w.validate(a.alphabet());
    const int u = static_cast<int>(w.prefix.size());
    const int len = u + static_cast<int>(w.period.size());
    auto letter = [&](int pos) { return pos < u ? w.prefix[pos] : w.period[pos - u]; };
    auto next_pos = [&](int pos) { return pos + 1 < len ? pos + 1 : u; };
    auto node = [&](int q, int pos) { return static_cast<std::size_t>(q) * len + pos; };

    if (a.is_rejecting(a.initial())) return false;
    const std::size_t total = static_cast<std::size_t>(a.size()) * len;
    std::vector<char> reached(total, 0);
    std::vector<std::size_t> order{node(a.initial(), 0)};
    reached[order[0]] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int q = static_cast<int>(order[i] / len), pos = static_cast<int>(order[i] % len);
        for (int t : a.successors(q, letter(pos))) {
            if (a.is_rejecting(t)) continue;
            auto x = node(t, next_pos(pos));
            if (!reached[x]) {
                reached[x] = 1;
                order.push_back(x);
            }
        }
    }

    // The reachable part has an infinite path iff it has a cycle: peel off
    // nodes without successors until nothing changes.
    std::vector<int> outdeg(total, 0);
    std::vector<std::vector<std::size_t>> preds(total);
    for (auto x : order) {
        int q = static_cast<int>(x / len), pos = static_cast<int>(x % len);
        for (int t : a.successors(q, letter(pos))) {
            if (a.is_rejecting(t)) continue;
            auto y = node(t, next_pos(pos));
            ++outdeg[x];
            preds[y].push_back(x);
        }
    }
    std::vector<std::size_t> dead;
    for (auto x : order)
        if (outdeg[x] == 0) dead.push_back(x);
    std::size_t removed = 0;
    while (!dead.empty()) {
        auto x = dead.back();
        dead.pop_back();
        ++removed;
        for (auto y : preds[x])
            if (--outdeg[y] == 0) dead.push_back(y);
    }
    return removed < order.size();
}

std::vector<int>
run_det(const SafetyAutomaton& a, std::span<const int> word)
{
    if (!a.deterministic()) throw std::invalid_argument("run_det needs a deterministic automaton");
    std::vector<int> trace{a.initial()};
    trace.reserve(word.size() + 1);
    for (int letter : word) {
        if (letter < 1 || letter > a.alphabet()) throw std::invalid_argument("letter outside the alphabet");
        trace.push_back(a.step(trace.back(), letter));
    }
    return trace;
}

SubsetRun::SubsetRun(const SafetyAutomaton& a) : a_(&a), seen_(a.size(), 0)
{
    if (!a.is_rejecting(a.initial())) current_.push_back(a.initial());
}

bool
SubsetRun::step(int letter)
{
    if (letter < 1 || letter > a_->alphabet()) throw std::invalid_argument("letter outside the alphabet");
    if (++stamp_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        stamp_ = 1;
    }
    next_.clear();
    for (int q : current_) {
        for (int t : a_->successors(q, letter)) {
            if (a_->is_rejecting(t) || seen_[t] == stamp_) continue;
            seen_[t] = stamp_;
            next_.push_back(t);
        }
    }
    std::swap(current_, next_);
    return alive();
}

} // namespace parsep
