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

#include "parsep/errors.hpp"
#include "parsep/json_io.hpp"

#include <gtest/gtest.h>

namespace parsep {
namespace {

TEST(GameJson, RoundTrip)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_game(10, 6, seed);
        auto j = game_to_json(g);
        EXPECT_EQ(j["n"], 10);
        auto h = game_from_json(j);
        EXPECT_EQ(h.owners(), g.owners());
        EXPECT_EQ(h.edges(), g.edges());
        EXPECT_EQ(h.d(), g.d());
        auto k = read_game(j.dump());
        EXPECT_EQ(k.edges(), g.edges());
    }
}

TEST(GameJson, ReadGameDetectsFormat)
{
    auto pg = read_game("parity 1; 0 2 0 0;");
    EXPECT_EQ(pg.size(), 1);
    auto js = read_game(R"( {"n":1,"d":2,"owner":[1],"edges":[{"src":0,"dst":0,"pri":1}]})");
    EXPECT_EQ(js.owner(0), Player::Odd);
    EXPECT_EQ(js.edge(0).priority, 1);
}

TEST(GameJson, Errors)
{
    EXPECT_THROW(read_game("{\"n\": 1"), ParseError);
    EXPECT_THROW(read_game(R"({"n":2,"owner":[0],"edges":[]})"), ParseError);
    EXPECT_THROW(read_game(R"({"n":1,"owner":[2],"edges":[{"src":0,"dst":0,"pri":2}]})"), ParseError);
    EXPECT_THROW(read_game(R"({"n":1,"owner":[0],"edges":[{"src":0,"dst":3,"pri":2}]})"), ParseError);
    EXPECT_THROW(read_game(R"({"n":1,"owner":[0],"edges":[]})"), ParseError);
    EXPECT_THROW(read_game(R"({"n":1,"owner":[0],"edges":[{"src":0,"dst":0}]})"), ParseError);
}

TEST(TreeJson, RoundTrip)
{
    auto t = succinct_tree(5, 3).shape();
    EXPECT_EQ(tree_from_json(tree_to_json(t)), t);
    EXPECT_EQ(tree_to_json(TreeShape::flat(2)).dump(), "[[],[]]");
    EXPECT_THROW(tree_from_json(json::parse("[1]")), ParseError);
}

TEST(AutomatonJson, RoundTrip)
{
    for (const auto& a : {counter_separator(2, 4), tree_separator(succinct_tree(3, 2), 4)}) {
        auto b = automaton_from_json(automaton_to_json(a));
        EXPECT_EQ(b.size(), a.size());
        EXPECT_EQ(b.initial(), a.initial());
        EXPECT_EQ(b.names(), a.names());
        for (int q = 0; q < a.size(); ++q)
            for (int p = 1; p <= a.alphabet(); ++p) EXPECT_EQ(b.step(q, p), a.step(q, p));
    }
}

TEST(AutomatonJson, ParityAutomatonExport)
{
    auto r = register_automaton(2, 2);
    auto j = automaton_to_json(r);
    EXPECT_EQ(j["priority_bound"], r.priority_bound());
    EXPECT_TRUE(j["transitions"][0].contains("pri"));
    EXPECT_THROW(automaton_from_json(j), ParseError);
}

TEST(AutomatonJson, Errors)
{
    EXPECT_THROW(read_automaton("[]"), ParseError);
    EXPECT_THROW(read_automaton(R"({"states":1,"alphabet":2,"initial":[0,0],"transitions":[]})"), ParseError);
    EXPECT_THROW(read_automaton(R"({"states":1,"alphabet":2,"initial":0,"transitions":[{"from":0,"letter":3,"to":0}]})"),
                 ParseError);
    EXPECT_THROW(read_automaton(R"({"states":2,"alphabet":1,"initial":0,"deterministic":true,
        "transitions":[{"from":0,"letter":1,"to":0},{"from":0,"letter":1,"to":1}]})"),
                 ParseError);
    auto single = read_automaton(R"({"states":1,"alphabet":2,"initial":[0],"transitions":[{"from":0,"letter":2,"to":0}]})");
    EXPECT_EQ(single.size(), 2);
}

TEST(ReportJson, ValidationWitness)
{
    ValidationReport r;
    r.verdict = Verdict::Fail;
    SectionReport s;
    s.name = "odd-lassos";
    s.status = Verdict::Fail;
    s.witness = Lasso{{}, {1}};
    r.sections.push_back(s);
    auto j = validation_to_json(r);
    EXPECT_EQ(j["verdict"], "FAIL");
    EXPECT_EQ(j["witnesses"][0]["lasso"]["period"], json::array({1}));
}

} // namespace
} // namespace parsep
