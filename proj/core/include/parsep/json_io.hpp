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
#include "parsep/lowerbound.hpp"
#include "parsep/solvers.hpp"
#include "parsep/trees.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace parsep {

using json = nlohmann::ordered_json;

/// {"n", "d", "owner": [0 = Even, 1 = Odd], "edges": [{"src", "dst", "pri"}]}
json game_to_json(const ParityGame& game);
ParityGame game_from_json(const json& j);

/// JSON if the text starts with '{', PGSolver otherwise. Throws ParseError.
ParityGame read_game(std::string_view text);

/// A node is the array of its children; a leaf is [].
json tree_to_json(const TreeShape& tree);
TreeShape tree_from_json(const json& j);

/**
 * {"states", "alphabet", "initial", "rejecting", "transitions": [{"from",
 * "letter", "to"}], "deterministic", "names"}. Parity automata add
 * "priority_bound" and a "pri" per transition.
 */
json automaton_to_json(const SafetyAutomaton& a);
json automaton_to_json(const ParityAutomaton& a);
SafetyAutomaton automaton_from_json(const json& j);
SafetyAutomaton read_automaton(std::string_view text);

json lasso_to_json(const Lasso& w);
json witness_to_json(const OddCycleWitness& w);
json solution_to_json(const Solution& sol);
json bounds_to_json(const SizeBounds& b);
json validation_to_json(const ValidationReport& r);
json lower_bound_to_json(const LowerBoundReport& r);

} // namespace parsep
