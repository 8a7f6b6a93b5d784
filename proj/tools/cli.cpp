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

#include "cli.hpp"

#include "parsep/automata.hpp"
#include "parsep/errors.hpp"
#include "parsep/json_io.hpp"
#include "parsep/lowerbound.hpp"
#include "parsep/solvers.hpp"
#include "parsep/trees.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace parsep::cli {

namespace {

const std::vector<std::string> kAlgorithms = {"zielonka",  "sep-counter", "sep-tree",
                                              "sep-register", "lift-full", "lift-succinct"};

std::string
read_input(const std::string& path, std::istream& in)
{
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void
emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    file << text;
}

json
header(const std::string& command, json config)
{
    return {{"tool", "parsep"}, {"version", PARSEP_VERSION}, {"command", command}, {"config", std::move(config)}};
}

double
seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int
half_height(int d)
{
    return std::max(1, d / 2);
}

struct AlgoRun
{
    Solution solution;
    json stats = json::object();
};

AlgoRun
run_algorithm(const ParityGame& game, const std::string& algo)
{
    const int n = game.size();
    const int d = game.d();
    AlgoRun run;
    auto separation = [&](const SafetyAutomaton& a) {
        SeparationStats st;
        run.solution = solve_by_separation(game, a, &st);
        run.stats["product_states"] = st.product_states;
        run.stats["product_edges"] = st.product_edges;
        run.stats["automaton_states"] = a.size();
    };
    auto lifting = [&](const OrderedTree& tree) {
        auto res = lift_solve(game, tree);
        run.solution = std::move(res.solution);
        complete_strategies(game, run.solution);
        run.stats["lift_count"] = res.lifts;
        run.stats["tree_leaves"] = tree.leaf_count();
    };
    if (algo == "zielonka") {
        run.solution = zielonka(game);
    } else if (algo == "sep-counter") {
        separation(counter_separator(n, d));
    } else if (algo == "sep-tree") {
        separation(tree_separator(succinct_tree(n, half_height(d)), d));
    } else if (algo == "sep-register") {
        auto r = register_automaton(n, d);
        const int m = register_count(n);
        auto s = tree_separator(succinct_tree(n * r.size(), m + 1), 2 * m + 2);
        separation(product_parity_safety(r, s));
    } else if (algo == "lift-full") {
        lifting(full_tree(n, half_height(d)));
    } else if (algo == "lift-succinct") {
        lifting(succinct_tree(n, half_height(d)));
    } else {
        throw std::invalid_argument("unknown algorithm " + algo);
    }
    return run;
}

struct SolveOptions
{
    std::string algo = "zielonka";
    bool cross_check = false;
    bool timing = false;
};

/// One input file; `status` is the worst exit code seen.
json
solve_one(const ParityGame& game, const SolveOptions& opt, int& status)
{
    json result;
    auto attempt = [&](const std::string& algo) -> std::optional<AlgoRun> {
        try {
            return run_algorithm(game, algo);
        } catch (const CapExceeded& e) {
            // cross-check skips algorithms that do not fit
            if (opt.cross_check) {
                result["skipped"][algo] = e.what();
            } else {
                status = std::max(status, static_cast<int>(kCapExceeded));
                result["errors"][algo] = e.what();
            }
            return std::nullopt;
        }
    };
    auto describe = [&](const std::string& algo, const AlgoRun& run, double secs) {
        json j = solution_to_json(run.solution);
        json stats = {{"product_states", nullptr}, {"lift_count", nullptr}};
        stats.update(run.stats);
        if (opt.timing) stats["time"] = secs;
        j["stats"] = std::move(stats);
        j["verified"] = verify_solution(game, run.solution);
        return j;
    };

    if (!opt.cross_check) {
        auto start = std::chrono::steady_clock::now();
        auto run = attempt(opt.algo);
        if (!run) return result;
        json j = describe(opt.algo, *run, seconds_since(start));
        if (!j["verified"].get<bool>()) status = std::max(status, static_cast<int>(kFailed));
        result.update(j);
        result["algo"] = opt.algo;
        return result;
    }

    std::optional<std::vector<Player>> reference;
    json runs = json::object();
    json divergences = json::array();
    for (const auto& algo : kAlgorithms) {
        auto start = std::chrono::steady_clock::now();
        auto run = attempt(algo);
        if (!run) continue;
        json j = describe(algo, *run, seconds_since(start));
        if (!reference) reference = run->solution.winner;
        bool agrees = run->solution.winner == *reference;
        if (!agrees || !j["verified"].get<bool>()) {
            divergences.push_back({{"algo", algo}, {"winner_mismatch", !agrees}, {"verified", j["verified"]}});
        }
        runs[algo] = std::move(j);
    }
    if (!divergences.empty()) status = std::max(status, static_cast<int>(kFailed));
    result["agree"] = divergences.empty();
    result["divergences"] = divergences;
    result["runs"] = runs;
    if (runs.contains("zielonka")) {
        result["winner_per_vertex"] = runs["zielonka"]["winner_per_vertex"];
        result["strategy"] = runs["zielonka"]["strategy"];
    }
    return result;
}

int
cmd_solve(const std::vector<std::string>& inputs, const SolveOptions& opt, int jobs, const std::string& out_path,
          std::istream& in, std::ostream& out)
{
    if (std::count(inputs.begin(), inputs.end(), "-") > 1) throw std::invalid_argument("stdin can be read only once");
    std::vector<ParityGame> games;
    for (const auto& path : inputs) games.push_back(read_game(read_input(path, in)));

    std::vector<json> results(games.size());
    std::vector<int> status(games.size(), kOk);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < games.size();) {
            try {
                results[i] = solve_one(games[i], opt, status[i]);
                results[i]["input"] = inputs[i];
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(1, games.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    json report = header("solve", {{"inputs", inputs},
                                   {"algo", opt.cross_check ? json("cross-check") : json(opt.algo)},
                                   {"timing", opt.timing}});
    if (results.size() == 1) {
        report.update(results[0]);
    } else {
        report["results"] = results;
    }
    emit(report.dump(2) + "\n", out_path, out);
    return *std::max_element(status.begin(), status.end());
}

SafetyAutomaton
generate_separator(const std::string& kind, int n, int d)
{
    if (kind == "counter") return counter_separator(n, d);
    if (kind == "tree") return tree_separator(succinct_tree(n, half_height(d)), d);
    if (kind == "tree-full") return tree_separator(full_tree(n, half_height(d)), d);
    if (kind == "register") {
        auto r = register_automaton(n, d);
        const int m = register_count(n);
        auto s = tree_separator(succinct_tree(n * r.size(), m + 1), 2 * m + 2);
        return product_parity_safety(r, s);
    }
    throw std::invalid_argument("unknown separator kind " + kind);
}

json
decomposition_to_json(const SafetyAutomaton& a, const TreeDecomposition& dec)
{
    json levels = json::array();
    for (std::size_t k = 0; k < dec.class_of.size(); ++k) {
        std::vector<std::vector<int>> classes(dec.class_count[k]);
        for (int q = 0; q < a.size(); ++q)
            if (dec.class_of[k][q] >= 0) classes[dec.class_of[k][q]].push_back(q);
        json named = json::array();
        for (const auto& c : classes) {
            json names = json::array();
            for (int q : c) names.push_back(a.name(q));
            named.push_back(names);
        }
        levels.push_back({{"priority", 2 * static_cast<int>(k) + 1}, {"classes", classes}, {"names", named}});
    }
    return levels;
}

int
verdict_code(Verdict v)
{
    return v == Verdict::Fail ? kFailed : kOk;
}

std::string
csv_row(const json& row, const std::vector<std::string>& columns, bool with_header)
{
    std::ostringstream os;
    if (with_header) {
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
        os << "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "");
        const auto& v = row.at(columns[i]);
        if (v.is_string()) os << v.get<std::string>();
        else os << v.dump();
    }
    os << "\n";
    return os.str();
}

} // namespace

int
run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Separating automata and universal trees for parity games", "parsep"};
    app.set_version_flag("--version", std::string(PARSEP_VERSION));
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 0;

    // solve
    auto* solve = app.add_subcommand("solve", "Solve parity games (PGSolver or JSON)");
    std::vector<std::string> solve_inputs;
    SolveOptions solve_opt;
    int jobs = 1;
    solve->add_option("inputs", solve_inputs, "Game files, - for stdin")->required();
    solve->add_option("--algo", solve_opt.algo, "Algorithm")->check(CLI::IsMember(kAlgorithms));
    solve->add_flag("--cross-check", solve_opt.cross_check, "Run every algorithm and compare with zielonka");
    solve->add_flag("--timing", solve_opt.timing, "Report wall-clock seconds");
    solve->add_option("--jobs", jobs, "Parallel instances")->check(CLI::PositiveNumber);
    solve->add_option("--out", out_path, "Output file");

    // game
    auto* game = app.add_subcommand("game", "Generate or convert games");
    game->require_subcommand(1);
    std::string game_format = "json";
    auto* game_random = game->add_subcommand("random", "Seeded random game");
    int game_n = 10, game_d = 4, game_degree = 3;
    game_random->add_option("--n", game_n)->check(CLI::PositiveNumber);
    game_random->add_option("--d", game_d)->check(CLI::PositiveNumber);
    game_random->add_option("--max-out-degree", game_degree)->check(CLI::PositiveNumber);
    game_random->add_option("--seed", seed);
    game_random->add_option("--format", game_format)->check(CLI::IsMember({"json", "pgsolver"}));
    game_random->add_option("--out", out_path);
    auto* game_dump = game->add_subcommand("dump", "Convert a game between formats");
    std::string game_input;
    game_dump->add_option("input", game_input)->required();
    game_dump->add_option("--format", game_format)->check(CLI::IsMember({"json", "pgsolver"}));
    game_dump->add_option("--out", out_path);

    // separator
    auto* sep = app.add_subcommand("separator", "Separating automata");
    sep->require_subcommand(1);
    int sep_n = 2, sep_d = 2;
    std::string sep_kind = "counter", sep_input;
    ValidationOptions vopt;
    bool skip_validation = false;
    auto* sep_gen = sep->add_subcommand("gen", "Write a built-in separator as JSON");
    sep_gen->add_option("--kind", sep_kind)->check(CLI::IsMember({"counter", "tree", "tree-full", "register"}));
    auto* sep_validate = sep->add_subcommand("validate", "Empirical separator check");
    auto* sep_extract = sep->add_subcommand("extract", "Tree decomposition and D-tree");
    auto* sep_lower = sep->add_subcommand("lower-bound", "Compare the D-tree with the lower bounds");
    for (auto* sub : {sep_gen, sep_validate, sep_extract, sep_lower}) {
        sub->add_option("--n", sep_n)->check(CLI::PositiveNumber);
        sub->add_option("--d", sep_d)->check(CLI::PositiveNumber);
        sub->add_option("--out", out_path);
    }
    for (auto* sub : {sep_validate, sep_extract, sep_lower}) sub->add_option("input", sep_input)->required();
    for (auto* sub : {sep_validate, sep_lower}) {
        sub->add_option("--budget", vopt.budget, "Letters per alpha stream")->check(CLI::PositiveNumber);
        sub->add_option("--graphs", vopt.graphs)->check(CLI::NonNegativeNumber);
        sub->add_option("--lassos-per-graph", vopt.lassos_per_graph)->check(CLI::NonNegativeNumber);
        sub->add_option("--random-odd", vopt.random_odd)->check(CLI::NonNegativeNumber);
        sub->add_option("--repetition", vopt.repetition, "Alpha repetition, 0 = number of states");
        sub->add_option("--seed", vopt.seed);
    }
    sep_lower->add_flag("--skip-validation", skip_validation, "Do not validate before comparing with g and B");

    // trees
    auto* trees = app.add_subcommand("trees", "Universal tree sizes");
    trees->require_subcommand(1);
    int tree_l = 2, tree_h = 2;
    std::uint64_t tree_cap = kDefaultEnumerationCap;
    std::string tree_format = "json", tree_kind = "succinct";
    auto* trees_bounds = trees->add_subcommand("bounds", "g, binomial lower bound, upper bound, constructed size");
    auto* trees_min = trees->add_subcommand("min", "Brute-force minimum universal size");
    auto* trees_build = trees->add_subcommand("build", "Write a universal tree as nested arrays");
    trees_build->add_option("--kind", tree_kind)->check(CLI::IsMember({"succinct", "full"}));
    for (auto* sub : {trees_bounds, trees_min, trees_build}) {
        sub->add_option("-l,--leaves", tree_l)->check(CLI::PositiveNumber);
        sub->add_option("-H,--height", tree_h)->check(CLI::PositiveNumber);
        sub->add_option("--out", out_path);
    }
    for (auto* sub : {trees_bounds, trees_min}) {
        sub->add_option("--format", tree_format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--cap", tree_cap, "Enumeration cap for the brute-force minimum")->check(CLI::PositiveNumber);
    }
    trees_bounds->add_flag("--with-min", "Include the brute-force minimum");

    // CLI11 reserves -h for help; accept "-h N" as the height like the other short flags.
    std::vector<std::string> argv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "-h" && i + 1 < args.size() && !args[i + 1].empty() &&
            std::isdigit(static_cast<unsigned char>(args[i + 1][0]))) {
            argv.push_back("-H");
        } else {
            argv.push_back(args[i]);
        }
    }
    std::reverse(argv.begin(), argv.end());

    try {
        app.parse(argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*solve) return cmd_solve(solve_inputs, solve_opt, jobs, out_path, in, out);

        if (*game_random) {
            RandomGameOptions gopt;
            gopt.max_out_degree = game_degree;
            gopt.vertex_priorities = game_format == "pgsolver";
            auto g = random_game(game_n, game_d, seed, gopt);
            emit(game_format == "json" ? game_to_json(g).dump(2) + "\n" : write_pgsolver(g), out_path, out);
            return kOk;
        }
        if (*game_dump) {
            auto g = read_game(read_input(game_input, in));
            emit(game_format == "json" ? game_to_json(g).dump(2) + "\n" : write_pgsolver(g), out_path, out);
            return kOk;
        }

        json sep_config = {{"n", sep_n}, {"d", sep_d}};
        if (*sep_gen) {
            auto a = generate_separator(sep_kind, sep_n, sep_d);
            json j = automaton_to_json(a);
            j["kind"] = sep_kind;
            emit(j.dump(2) + "\n", out_path, out);
            return kOk;
        }
        if (*sep_validate || *sep_extract || *sep_lower) {
            auto a = read_automaton(read_input(sep_input, in));
            sep_config["input"] = sep_input;
            if (*sep_validate) {
                sep_config.update({{"budget", vopt.budget}, {"graphs", vopt.graphs},
                                   {"lassos_per_graph", vopt.lassos_per_graph}, {"random_odd", vopt.random_odd},
                                   {"repetition", vopt.repetition}, {"seed", vopt.seed}});
                auto rep = validate_separator(a, sep_n, sep_d, vopt);
                json report = header("separator validate", sep_config);
                report.update(validation_to_json(rep));
                emit(report.dump(2) + "\n", out_path, out);
                return verdict_code(rep.verdict);
            }
            if (*sep_extract) {
                auto acc = make_accessible(a);
                json report = header("separator extract", sep_config);
                report["accessible_states"] = acc.size();
                auto dec = extract_decomposition(acc, sep_d);
                if (auto* w = std::get_if<OddCycleWitness>(&dec)) {
                    report["verdict"] = "FAIL";
                    report["witnesses"] = json::array({witness_to_json(*w)});
                    emit(report.dump(2) + "\n", out_path, out);
                    return kFailed;
                }
                const auto& td = std::get<TreeDecomposition>(dec);
                auto problem = verify_decomposition(acc, td);
                auto dt = d_tree(acc, td);
                report["verdict"] = problem ? "FAIL" : "PASS";
                if (problem) report["decomposition_error"] = *problem;
                report["levels"] = decomposition_to_json(acc, td);
                report["d_tree"] = {{"leaves", dt.tree.leaf_count()},
                                    {"height", dt.tree.height()},
                                    {"leaf_state", dt.leaf_state},
                                    {"shape", tree_to_json(dt.tree.shape())}};
                emit(report.dump(2) + "\n", out_path, out);
                return problem ? kFailed : kOk;
            }
            json report = header("separator lower-bound", sep_config);
            bool validated = false;
            if (!skip_validation) {
                auto rep = validate_separator(a, sep_n, sep_d, vopt);
                report["validation"] = validation_to_json(rep);
                if (rep.verdict == Verdict::Fail) {
                    report.update(lower_bound_to_json(lower_bound_report(a, sep_n, sep_d, false)));
                    report["verdict"] = "FAIL";
                    emit(report.dump(2) + "\n", out_path, out);
                    return kFailed;
                }
                validated = rep.verdict == Verdict::Pass;
            }
            auto lb = lower_bound_report(a, sep_n, sep_d, validated);
            report.update(lower_bound_to_json(lb));
            report["validated"] = validated;
            emit(report.dump(2) + "\n", out_path, out);
            return lb.ok() ? kOk : kFailed;
        }

        json tree_config = {{"l", tree_l}, {"h", tree_h}};
        if (*trees_bounds || *trees_min) {
            json row = {{"l", tree_l}, {"h", tree_h}};
            std::vector<std::string> columns = {"l", "h"};
            if (*trees_bounds) {
                row.update(bounds_to_json(size_bounds(tree_l, tree_h)));
                row["constructed"] = succinct_leaf_count(tree_l, tree_h);
                columns.insert(columns.end(), {"g", "binom_lower", "jl_upper", "constructed"});
            }
            if (*trees_min || trees_bounds->count("--with-min") > 0) {
                row["min"] = min_universal_size(tree_l, tree_h, tree_cap);
                columns.push_back("min");
            }
            if (tree_format == "csv") {
                emit(csv_row(row, columns, true), out_path, out);
            } else {
                json report = header(*trees_min ? "trees min" : "trees bounds", tree_config);
                report.update(row);
                emit(report.dump(2) + "\n", out_path, out);
            }
            return kOk;
        }
        if (*trees_build) {
            auto t = tree_kind == "full" ? full_tree(tree_l, tree_h) : succinct_tree(tree_l, tree_h);
            json report = header("trees build", {{"l", tree_l}, {"h", tree_h}, {"kind", tree_kind}});
            report["leaves"] = t.leaf_count();
            report["tree"] = tree_to_json(t.shape());
            emit(report.dump(2) + "\n", out_path, out);
            return kOk;
        }
    } catch (const CapExceeded& e) {
        err << "parsep: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const ParseError& e) {
        err << "parsep: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "parsep: " << e.what() << "\n";
        return kInputError;
    } catch (const std::overflow_error& e) {
        err << "parsep: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "parsep: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace parsep::cli
