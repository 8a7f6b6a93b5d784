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

#include "parsep/json_io.hpp"

#include "parsep/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace parsep {

namespace {

template <class F>
auto
guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

json
parse_text(std::string_view text, const char* what)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace

json
game_to_json(const ParityGame& game)
{
    json owners = json::array();
    for (int v = 0; v < game.size(); ++v) owners.push_back(game.owner(v) == Player::Even ? 0 : 1);
    json edges = json::array();
    for (const auto& e : game.edges()) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"pri", e.priority}});
    return {{"n", game.size()}, {"d", game.d()}, {"owner", owners}, {"edges", edges}};
}

ParityGame
game_from_json(const json& j)
{
    return guarded("game", [&] {
        const int n = j.at("n").get<int>();
        const auto& owners = j.at("owner");
        if (!owners.is_array() || static_cast<int>(owners.size()) != n) {
            throw std::invalid_argument("owner must list every vertex");
        }
        std::vector<Player> owner;
        for (const auto& o : owners) {
            int x = o.get<int>();
            if (x != 0 && x != 1) throw std::invalid_argument("owner must be 0 or 1");
            owner.push_back(x == 0 ? Player::Even : Player::Odd);
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>(), e.at("pri").get<int>()});
        }
        return ParityGame(std::move(owner), std::move(edges), j.value("d", 0));
    });
}

ParityGame
read_game(std::string_view text)
{
    auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    if (first != text.end() && *first == '{') return game_from_json(parse_text(text, "game"));
    return parse_pgsolver(text);
}

json
tree_to_json(const TreeShape& tree)
{
    json j = json::array();
    for (const auto& c : tree.children) j.push_back(tree_to_json(c));
    return j;
}

TreeShape
tree_from_json(const json& j)
{
    if (!j.is_array()) throw ParseError("tree: every node must be an array of children");
    TreeShape t;
    for (const auto& c : j) t.children.push_back(tree_from_json(c));
    return t;
}

json
automaton_to_json(const SafetyAutomaton& a)
{
    json trans = json::array();
    for (const auto& t : a.transitions()) {
        if (a.is_rejecting(t.from)) continue;
        trans.push_back({{"from", t.from}, {"letter", t.letter}, {"to", t.to}});
    }
    return {{"states", a.size()},          {"alphabet", a.alphabet()},       {"initial", a.initial()},
            {"rejecting", {a.reject()}}, {"transitions", trans},           {"deterministic", a.deterministic()},
            {"names", a.names()}};
}

json
automaton_to_json(const ParityAutomaton& a)
{
    json trans = json::array();
    json names = json::array();
    for (int q = 0; q < a.size(); ++q) {
        names.push_back(a.name(q));
        for (int p = 1; p <= a.alphabet(); ++p)
            for (auto m : a.moves(q, p)) trans.push_back({{"from", q}, {"letter", p}, {"pri", m.priority}, {"to", m.to}});
    }
    return {{"states", a.size()},       {"alphabet", a.alphabet()}, {"priority_bound", a.priority_bound()},
            {"initial", a.initial()},   {"rejecting", json::array()}, {"transitions", trans},
            {"deterministic", false}, {"names", names}};
}

SafetyAutomaton
automaton_from_json(const json& j)
{
    return guarded("automaton", [&] {
        if (j.contains("priority_bound")) throw std::invalid_argument("parity automata cannot be used as separators");
        const int states = j.at("states").get<int>();
        const int alphabet = j.at("alphabet").get<int>();
        const auto& init = j.at("initial");
        if (init.is_array()) {
            if (init.size() != 1) {
                throw std::invalid_argument("exactly one initial state is supported; add a fresh initial state");
            }
        }
        const int initial = init.is_array() ? init[0].get<int>() : init.get<int>();
        std::vector<int> rejecting = j.value("rejecting", std::vector<int>{});
        std::vector<Transition> trans;
        for (const auto& t : j.at("transitions")) {
            if (t.contains("pri")) throw std::invalid_argument("transition priorities belong to parity automata");
            trans.push_back({t.at("from").get<int>(), t.at("letter").get<int>(), t.at("to").get<int>()});
        }
        std::vector<std::string> names = j.value("names", std::vector<std::string>{});
        SafetyAutomaton a(states, alphabet, initial, rejecting, trans, std::move(names));
        if (j.contains("deterministic") && j.at("deterministic").get<bool>() && !a.deterministic()) {
            throw std::invalid_argument("marked deterministic but has several transitions on one letter");
        }
        return a;
    });
}

SafetyAutomaton
read_automaton(std::string_view text)
{
    return automaton_from_json(parse_text(text, "automaton"));
}

json
lasso_to_json(const Lasso& w)
{
    return {{"prefix", w.prefix}, {"period", w.period}, {"text", to_string(w)}};
}

json
witness_to_json(const OddCycleWitness& w)
{
    return {{"lasso", lasso_to_json(w.lasso)}, {"cycle_states", w.cycle_states}};
}

json
solution_to_json(const Solution& sol)
{
    json winners = json::array();
    for (Player p : sol.winner) winners.push_back(to_string(p));
    json strategy = json::array();
    for (int e : sol.strategy) {
        if (e == kNoEdge) strategy.push_back(nullptr);
        else strategy.push_back(e);
    }
    json out = {{"winner_per_vertex", winners}, {"strategy", strategy}};
    if (sol.even_memory) {
        const auto& mem = *sol.even_memory;
        std::vector<std::pair<std::uint64_t, int>> moves(mem.move.begin(), mem.move.end());
        std::sort(moves.begin(), moves.end());
        json m = json::array();
        for (auto [key, e] : moves) {
            auto v = static_cast<int>(key / static_cast<std::uint64_t>(mem.memory_size));
            auto q = static_cast<int>(key % static_cast<std::uint64_t>(mem.memory_size));
            m.push_back({v, q, e});
        }
        out["even_memory_strategy"] = {{"initial_memory", mem.initial_memory}, {"moves", m}};
    }
    return out;
}

json
bounds_to_json(const SizeBounds& b)
{
    return {{"g", b.g}, {"binom_lower", b.binom_lower}, {"jl_upper", b.jl_upper}};
}

json
validation_to_json(const ValidationReport& r)
{
    json sections = json::array();
    json witnesses = json::array();
    for (const auto& s : r.sections) {
        json js = {{"name", s.name}, {"status", to_string(s.status)}, {"checked", s.checked}, {"truncated", s.truncated}};
        if (!s.note.empty()) js["note"] = s.note;
        if (s.witness) {
            js["witness"] = lasso_to_json(*s.witness);
            witnesses.push_back({{"section", s.name}, {"lasso", lasso_to_json(*s.witness)}});
        }
        sections.push_back(std::move(js));
    }
    return {{"verdict", to_string(r.verdict)}, {"sections", sections}, {"witnesses", witnesses}};
}

json
lower_bound_to_json(const LowerBoundReport& r)
{
    json out;
    if (!r.separator) {
        out["verdict"] = "not a strong separator";
        out["witnesses"] = json::array({witness_to_json(*r.witness)});
        out["counts"] = {{"Q", r.live_states}, {"B", r.bound}, {"g", r.g}};
        return out;
    }
    out["verdict"] = r.ok() ? "PASS" : "FAIL";
    out["counts"] = {{"L", r.leaves}, {"Q", r.live_states}, {"B", r.bound}, {"g", r.g}};
    out["universal"] = r.universal ? json(*r.universal) : json(nullptr);
    if (r.decomposition_error) out["decomposition_error"] = *r.decomposition_error;
    out["failures"] = r.failures;
    out["witnesses"] = json::array();
    return out;
}

} // namespace parsep
