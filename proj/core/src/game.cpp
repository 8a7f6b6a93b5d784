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

#include "parsep/game.hpp"

#include "parsep/errors.hpp"
#include "parsep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace parsep {

std::string_view
to_string(Player p)
{
    return p == Player::Even ? "even" : "odd";
}

GameGraph::GameGraph(int vertices, std::vector<Edge> edges, int d)
    : n_(vertices), edges_(std::move(edges))
{
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : edges_) {
        if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.src) + "->" +
                                        std::to_string(e.dst));
        }
        if (e.priority < 1) throw std::invalid_argument("edge priority must be >= 1");
        max_priority_ = std::max(max_priority_, e.priority);
    }
    if (d == 0) {
        d_ = even_bound(max_priority_);
    } else {
        if (d < 2 || d % 2 != 0) throw std::invalid_argument("d must be even and >= 2");
        if (max_priority_ > d) throw std::invalid_argument("edge priority exceeds d");
        d_ = d;
    }

    out_offsets_.assign(n_ + 1, 0);
    in_offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++out_offsets_[e.src + 1];
        ++in_offsets_[e.dst + 1];
    }
    for (int v = 0; v < n_; ++v) {
        out_offsets_[v + 1] += out_offsets_[v];
        in_offsets_[v + 1] += in_offsets_[v];
    }
    out_ids_.resize(edges_.size());
    in_ids_.resize(edges_.size());
    std::vector<int> of(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<int> inf(in_offsets_.begin(), in_offsets_.end() - 1);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        out_ids_[of[edges_[id].src]++] = id;
        in_ids_[inf[edges_[id].dst]++] = id;
    }
}

ParityGame::ParityGame(std::vector<Player> owner, std::vector<Edge> edges, int d)
    : graph_(static_cast<int>(owner.size()), std::move(edges), d), owner_(std::move(owner))
{
    if (owner_.empty()) throw std::invalid_argument("a parity game needs at least one vertex");
    for (int v = 0; v < size(); ++v) {
        if (graph_.out_degree(v) == 0) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no outgoing edge");
        }
    }
}

// ---------------------------------------------------------------------------
// PGSolver

namespace {

std::vector<std::string>
split_statements(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : text) {
        if (c == '"') quoted = !quoted;
        if (c == ';' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    auto blank = [](const std::string& s) {
        return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); });
    };
    if (!blank(cur)) throw ParseError("missing ';' after last statement");
    if (quoted) throw ParseError("unterminated quoted name");
    return out;
}

long long
parse_int(std::string_view tok, const char* what, std::size_t stmt)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("statement " + std::to_string(stmt) + ": bad " + what + " '" + std::string(tok) + "'");
    }
    return value;
}

struct RawVertex
{
    long long id;
    long long priority;
    int owner;
    std::vector<long long> successors;
};

} // namespace

ParityGame
parse_pgsolver(std::string_view text)
{
    auto statements = split_statements(text);
    std::vector<RawVertex> raw;
    bool header = false;

    for (std::size_t s = 0; s < statements.size(); ++s) {
        std::string body = statements[s];
        // names are quoted and may contain anything; drop them before tokenizing
        if (auto q = body.find('"'); q != std::string::npos) body.erase(q);
        std::istringstream in(body);
        std::vector<std::string> tok;
        for (std::string t; in >> t;) tok.push_back(t);
        if (tok.empty()) {
            if (statements[s].find('"') != std::string::npos) throw ParseError("name without vertex");
            continue;
        }
        if (tok[0] == "parity") {
            if (header || !raw.empty()) throw ParseError("unexpected 'parity' header");
            if (tok.size() != 2) throw ParseError("malformed header");
            parse_int(tok[1], "header size", s);
            header = true;
            continue;
        }
        if (tok[0] == "start") {
            if (tok.size() != 2) throw ParseError("malformed start statement");
            parse_int(tok[1], "start vertex", s);
            continue;
        }
        if (tok.size() < 3) throw ParseError("statement " + std::to_string(s) + ": malformed vertex line");
        RawVertex v;
        v.id = parse_int(tok[0], "vertex id", s);
        v.priority = parse_int(tok[1], "priority", s);
        long long owner = parse_int(tok[2], "owner", s);
        if (v.id < 0) throw ParseError("negative vertex id");
        if (v.priority < 0) throw ParseError("vertex " + std::to_string(v.id) + " has a negative priority");
        if (owner != 0 && owner != 1) throw ParseError("vertex " + std::to_string(v.id) + " has owner " + tok[2]);
        v.owner = static_cast<int>(owner);
        if (tok.size() < 4) throw ParseError("vertex " + std::to_string(v.id) + " has no outgoing edge");
        if (tok.size() > 4) throw ParseError("statement " + std::to_string(s) + ": unexpected token '" + tok[4] + "'");
        std::string_view succ = tok[3];
        while (!succ.empty()) {
            auto comma = succ.find(',');
            auto item = succ.substr(0, comma);
            if (item.empty()) throw ParseError("vertex " + std::to_string(v.id) + ": empty successor");
            v.successors.push_back(parse_int(item, "successor", s));
            if (comma == std::string_view::npos) break;
            succ.remove_prefix(comma + 1);
            if (succ.empty()) throw ParseError("vertex " + std::to_string(v.id) + ": trailing ','");
        }
        raw.push_back(std::move(v));
    }
    if (!header) throw ParseError("missing 'parity N;' header");
    if (raw.empty()) throw ParseError("game has no vertices");

    std::map<long long, int> index;
    for (const auto& v : raw) {
        if (!index.emplace(v.id, 0).second) throw ParseError("vertex " + std::to_string(v.id) + " declared twice");
    }
    int next = 0;
    for (auto& [id, idx] : index) idx = next++;

    const bool shift = std::any_of(raw.begin(), raw.end(), [](const RawVertex& v) { return v.priority == 0; });
    std::vector<Player> owner(raw.size());
    std::vector<Edge> edges;
    for (const auto& v : raw) {
        int src = index.at(v.id);
        owner[src] = v.owner == 0 ? Player::Even : Player::Odd;
        int pri = static_cast<int>(v.priority + (shift ? 2 : 0));
        for (long long s : v.successors) {
            auto it = index.find(s);
            if (it == index.end()) {
                throw ParseError("vertex " + std::to_string(v.id) + " has dangling successor " + std::to_string(s));
            }
            edges.push_back({src, it->second, pri});
        }
    }
    return ParityGame(std::move(owner), std::move(edges));
}

std::string
write_pgsolver(const ParityGame& game)
{
    std::ostringstream out;
    out << "parity " << game.size() - 1 << ";\n";
    for (int v = 0; v < game.size(); ++v) {
        auto ids = game.out(v);
        int pri = game.edge(ids.front()).priority;
        out << v << ' ' << pri << ' ' << (game.owner(v) == Player::Even ? 0 : 1) << ' ';
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const Edge& e = game.edge(ids[i]);
            if (e.priority != pri) {
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " has edges of different priorities; not expressible in PGSolver format");
            }
            out << (i ? "," : "") << e.dst;
        }
        out << ";\n";
    }
    return out.str();
}

GameGraph
strategy_subgraph(const ParityGame& game, std::span<const int> sigma)
{
    if (static_cast<int>(sigma.size()) != game.size()) {
        throw std::invalid_argument("strategy size does not match the game");
    }
    std::vector<Edge> edges;
    for (int v = 0; v < game.size(); ++v) {
        if (game.owner(v) == Player::Odd) {
            for (int id : game.out(v)) edges.push_back(game.edge(id));
            continue;
        }
        int id = sigma[v];
        if (id == kNoEdge) throw std::invalid_argument("strategy misses Even vertex " + std::to_string(v));
        if (id < 0 || id >= static_cast<int>(game.edges().size()) || game.edge(id).src != v) {
            throw std::invalid_argument("strategy picks a non-edge at vertex " + std::to_string(v));
        }
        edges.push_back(game.edge(id));
    }
    return GameGraph(game.size(), std::move(edges), game.d());
}

std::optional<std::vector<int>>
find_cycle(const GameGraph& graph, Player parity)
{
    // For each priority p of the wanted parity, a p-edge with both ends in one
    // SCC of the subgraph of edges <= p lies on a cycle whose maximum is p.
    const int first = parity == Player::Even ? 2 : 1;
    for (int p = first; p <= graph.max_priority(); p += 2) {
        std::vector<Digraph::Arc> arcs;
        std::vector<int> arc_edge;
        for (int id = 0; id < static_cast<int>(graph.edges().size()); ++id) {
            const Edge& e = graph.edge(id);
            if (e.priority <= p) {
                arcs.push_back({e.src, e.dst});
                arc_edge.push_back(id);
            }
        }
        Digraph sub(graph.size(), arcs);
        auto scc = strongly_connected_components(sub);
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const Edge& e = graph.edge(arc_edge[a]);
            if (e.priority != p || scc.component[e.src] != scc.component[e.dst]) continue;
            // close the cycle: BFS from e.dst back to e.src inside the component
            const int comp = scc.component[e.src];
            std::vector<int> via(graph.size(), -2);
            std::vector<int> queue{e.dst};
            via[e.dst] = -1;
            for (std::size_t qi = 0; qi < queue.size() && via[e.src] == -2; ++qi) {
                int v = queue[qi];
                for (int arc : sub.out_arcs(v)) {
                    int w = sub.target(arc);
                    if (scc.component[w] != comp || via[w] != -2) continue;
                    via[w] = arc;
                    queue.push_back(w);
                }
            }
            std::vector<int> cycle;
            for (int v = e.src; v != e.dst;) {
                int arc = via[v];
                cycle.push_back(arc_edge[arc]);
                v = arcs[arc].src;
            }
            std::reverse(cycle.begin(), cycle.end());
            cycle.insert(cycle.begin(), arc_edge[a]);
            return cycle;
        }
    }
    return std::nullopt;
}

bool
is_even_graph(const GameGraph& graph)
{
    return !find_cycle(graph, Player::Odd).has_value();
}

bool
is_odd_graph(const GameGraph& graph)
{
    return !find_cycle(graph, Player::Even).has_value();
}

// ---------------------------------------------------------------------------
// Words

void
Lasso::validate(int d) const
{
    if (period.empty()) throw std::invalid_argument("lasso period must be nonempty");
    auto check = [d](int a) {
        if (a < 1 || (d > 0 && a > d)) throw std::invalid_argument("lasso letter out of range: " + std::to_string(a));
    };
    for (int a : prefix) check(a);
    for (int a : period) check(a);
}

int
Lasso::max_letter() const
{
    int m = 0;
    for (int a : prefix) m = std::max(m, a);
    for (int a : period) m = std::max(m, a);
    return m;
}

std::string
to_string(const Lasso& w)
{
    auto join = [](const Word& word) {
        std::string s;
        for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
        return s;
    };
    return "(" + join(w.prefix) + ")(" + join(w.period) + ")^w";
}

Player
classify_lasso(const Lasso& w)
{
    w.validate();
    return parity_of(*std::max_element(w.period.begin(), w.period.end()));
}

namespace {

int
step(const GameGraph& graph, int v, std::mt19937_64& rng)
{
    auto out = graph.out(v);
    if (out.empty()) throw std::invalid_argument("walk reached dead end at vertex " + std::to_string(v));
    std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
    return out[pick(rng)];
}

} // namespace

std::vector<Word>
sample_even_path_words(const GameGraph& graph, int count, int length, std::uint64_t seed, std::optional<int> start)
{
    if (!is_even_graph(graph)) throw std::invalid_argument("graph is not even");
    if (graph.size() == 0) throw std::invalid_argument("empty graph");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_vertex(0, graph.size() - 1);
    std::vector<Word> words;
    words.reserve(count);
    for (int i = 0; i < count; ++i) {
        int v = start ? *start : pick_vertex(rng);
        Word w;
        w.reserve(length);
        for (int k = 0; k < length; ++k) {
            const Edge& e = graph.edge(step(graph, v, rng));
            w.push_back(e.priority);
            v = e.dst;
        }
        words.push_back(std::move(w));
    }
    return words;
}

std::vector<Lasso>
sample_closed_walk_lassos(const GameGraph& graph, int count, std::uint64_t seed)
{
    if (graph.size() == 0) throw std::invalid_argument("empty graph");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_vertex(0, graph.size() - 1);
    std::vector<Lasso> result;
    result.reserve(count);
    std::vector<int> first_visit(graph.size());
    for (int i = 0; i < count; ++i) {
        std::fill(first_visit.begin(), first_visit.end(), -1);
        int v = pick_vertex(rng);
        Word letters;
        first_visit[v] = 0;
        for (;;) {
            const Edge& e = graph.edge(step(graph, v, rng));
            letters.push_back(e.priority);
            v = e.dst;
            if (first_visit[v] >= 0) break;
            first_visit[v] = static_cast<int>(letters.size());
        }
        Lasso w;
        w.prefix.assign(letters.begin(), letters.begin() + first_visit[v]);
        w.period.assign(letters.begin() + first_visit[v], letters.end());
        result.push_back(std::move(w));
    }
    return result;
}

ParityGame
random_game(int n, int d, std::uint64_t seed, const RandomGameOptions& options)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 2 || d % 2) throw std::invalid_argument("d must be even and >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> vertex(0, n - 1), pri(1, d), degree(1, std::max(1, options.max_out_degree)),
        coin(0, 1);
    std::vector<Player> owner(n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        owner[v] = coin(rng) ? Player::Odd : Player::Even;
        int k = degree(rng);
        int vp = pri(rng);
        for (int i = 0; i < k; ++i) edges.push_back({v, vertex(rng), options.vertex_priorities ? vp : pri(rng)});
    }
    return ParityGame(std::move(owner), std::move(edges), d);
}

GameGraph
random_even_graph(int n, int d, std::mt19937_64& rng, int edge_attempts)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 2 || d % 2) throw std::invalid_argument("d must be even and >= 2");
    const int h = d / 2;
    std::uniform_int_distribution<int> digit(0, n - 1), vertex(0, n - 1), pri(1, d), even_pri(1, h);
    // label[v][0] is the direction at the root, label[v][h-1] the last one
    std::vector<std::vector<int>> label(n, std::vector<int>(h));
    for (auto& l : label)
        for (int& x : l) x = digit(rng);

    auto progress = [&](int v, int u, int p) {
        int len = (d - p + 1) / 2;
        auto cmp = std::lexicographical_compare_three_way(label[v].begin(), label[v].begin() + len, label[u].begin(),
                                                          label[u].begin() + len);
        return p % 2 == 0 ? cmp >= 0 : cmp > 0;
    };

    if (edge_attempts <= 0) edge_attempts = 3 * n;
    std::vector<Edge> edges;
    std::vector<int> outdeg(n, 0);
    for (int i = 0; i < edge_attempts; ++i) {
        int v = vertex(rng), u = vertex(rng), p = pri(rng);
        if (progress(v, u, p)) {
            edges.push_back({v, u, p});
            ++outdeg[v];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (outdeg[v] == 0) edges.push_back({v, v, 2 * even_pri(rng)});
    }
    return GameGraph(n, std::move(edges), d);
}

} // namespace parsep
