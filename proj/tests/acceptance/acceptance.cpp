/*
 * Copyright 2026 The pgsuite Authors
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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance and runtime limit is fixed below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "pgsuite/altdepth.hpp"
#include "pgsuite/batch.hpp"
#include "pgsuite/generators.hpp"
#include "pgsuite/pgsolver.hpp"
#include "pgsuite/solve.hpp"
#include "pgsuite/stats.hpp"
#include "pgsuite/width.hpp"
#include "support.hpp"

using namespace pgsuite;
using json = nlohmann::json;
namespace fs = std::filesystem;
using testing_support::for_each_assignment;
using testing_support::for_each_structure;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;  // summary on success, first violation on failure
};

struct Criterion
{
    int number;
    const char* name;
    double limit_s;  // 0 = no runtime limit
    std::function<Outcome()> body;
};

Outcome fail(const std::string& why)
{
    return {false, why};
}

std::vector<std::vector<VertexId>> lists(const ParityGame& g)
{
    std::vector<std::vector<VertexId>> out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) out[v].assign(g.successors(v).begin(), g.successors(v).end());
    return out;
}

bool same_game(const ParityGame& a, const ParityGame& b)
{
    return a.vertices() == b.vertices() && a.successor_index() == b.successor_index();
}

ParityGame build(const std::vector<Priority>& prio, const std::vector<int>& owner,
                 const std::vector<std::vector<VertexId>>& succ)
{
    return testing_support::make_game(prio, owner, succ);
}

// 1 --------------------------------------------------------------------------

Outcome round_trip()
{
    std::mt19937_64 rng(1001);
    const char* labels[] = {"v", "with space", "quote \" inside", "back\\slash", "", "x;y,z"};
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 1000);
        const auto max_out = 1 + static_cast<std::uint32_t>(rng() % std::min<std::uint32_t>(n, 8));
        ParityGame g = gen_random(n, 1, max_out, static_cast<Priority>(rng() % 50), seed);
        std::vector<VertexInfo> info = g.vertices();
        for (auto& vi : info) {
            if (rng() % 4 == 0) vi.label = labels[rng() % 6];
        }
        g = ParityGame(info, lists(g));

        ParityGame once = parse_pgsolver(write_pgsolver(g)).game;
        ParityGame twice = parse_pgsolver(write_pgsolver(once)).game;
        if (!same_game(g, once) || !same_game(once, twice)) {
            return fail("mismatch for seed " + std::to_string(seed));
        }
    }
    return {true, "500 games"};
}

// 2 --------------------------------------------------------------------------

Outcome distance_oracles()
{
    std::mt19937_64 rng(2002);
    for (int i = 0; i < 200; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 200);
        ParityGame g = testing_support::random_game(rng, n, 1 + static_cast<std::uint32_t>(rng() % 4), 3,
                                                    i % 2 == 0 ? -1.0 : 0.0);
        if (diameter(g) != oracle::diameter(g)) return fail("diameter differs on game " + std::to_string(i));
        if (girth(g) != oracle::girth(g)) return fail("girth differs on game " + std::to_string(i));
    }
    return {true, "200 games"};
}

// 3 --------------------------------------------------------------------------

Outcome girth_self_loop_law()
{
    std::mt19937_64 rng(3003);
    std::size_t with_loop = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 60);
        const auto max_out = 1 + static_cast<std::uint32_t>(rng() % std::min<std::uint32_t>(n, 4));
        ParityGame g = gen_random(n, 1, max_out, 3, rng());
        if (i % 2 == 1 && n > 1) {
            // loop-free half, with a single self-loop put back in every other game
            g = testing_support::random_game(rng, n, max_out, 3, -1.0);
            if (i % 4 == 1) {
                auto succ = lists(g);
                const auto v = static_cast<VertexId>(rng() % n);
                succ[v].push_back(v);
                g = ParityGame(g.vertices(), succ);
            }
        }
        bool loop = false;
        for (VertexId v = 0; v < n; ++v) loop = loop || g.has_edge(v, v);
        with_loop += loop ? 1 : 0;
        const auto gi = girth(g);
        if (!gi) return fail("no cycle found in total game " + std::to_string(i));
        if ((*gi == 1) != loop) return fail("law violated on game " + std::to_string(i));
    }
    return {true, "1000 games, " + std::to_string(with_loop) + " with self-loops, 0 violations"};
}

// 4 --------------------------------------------------------------------------

Outcome bfs_height_bound()
{
    std::mt19937_64 rng(4004);
    for (int i = 0; i < 200; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 300);
        ParityGame base = testing_support::random_game(rng, n, 3, 3);
        // a random Hamiltonian path from 0 makes every vertex reachable
        std::vector<VertexId> order(n);
        for (VertexId v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin() + 1, order.end(), rng);
        auto succ = lists(base);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            auto& s = succ[order[j]];
            if (std::find(s.begin(), s.end(), order[j + 1]) == s.end()) s.push_back(order[j + 1]);
        }
        ParityGame g(base.vertices(), succ);
        BfsMetrics b = bfs_metrics(g, 0);
        if (b.unreachable_count != 0) return fail("construction left unreachable vertices");
        if (b.height > diameter(g)) return fail("height exceeds diameter on game " + std::to_string(i));
    }
    return {true, "200 games, 0 violations"};
}

// 5 --------------------------------------------------------------------------

Outcome altdepth_oracle()
{
    std::size_t games = 0;
    std::string problem;
    auto check = [&](const ParityGame& g) {
        ++games;
        const std::uint32_t ad = alternation_depth(g);
        if (ad != oracle::alternation_depth(g)) {
            problem = "mismatch on " + write_pgsolver(g);
            return false;
        }
        if (ad > size_summary(g).num_priorities) {
            problem = "ad exceeds |priorities| on " + write_pgsolver(g);
            return false;
        }
        return true;
    };

    // Owners do not enter the definition, so every game below is Even-owned.
    for (std::uint32_t n = 1; n <= 4 && problem.empty(); ++n) {
        for_each_structure(n, 2, [&](const auto& succ) {
            if (!problem.empty()) return;
            for_each_assignment<Priority>(n, 4, [&](const std::vector<Priority>& prio) {
                if (problem.empty()) check(testing_support::make_game(prio, succ));
            });
        });
    }
    const std::size_t exhaustive = games;

    std::mt19937_64 rng(5005);
    for (std::uint32_t n = 5; n <= 6 && problem.empty(); ++n) {
        const auto choices = testing_support::successor_choices(n, 2);
        for (int i = 0; i < 100000 && problem.empty(); ++i) {
            std::vector<std::vector<VertexId>> succ(n);
            std::vector<Priority> prio(n);
            for (VertexId v = 0; v < n; ++v) {
                succ[v] = choices[rng() % choices.size()];
                prio[v] = static_cast<Priority>(rng() % 4);
            }
            check(testing_support::make_game(prio, succ));
        }
    }
    for (int i = 0; i < 100 && problem.empty(); ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 12);
        check(testing_support::random_game(rng, n, 3, static_cast<Priority>(rng() % 8)));
    }
    if (!problem.empty()) return fail(problem);
    return {true, std::to_string(exhaustive) + " exhaustive (n<=4) + " + std::to_string(games - exhaustive) +
                      " sampled games"};
}

// 6 --------------------------------------------------------------------------

Outcome altdepth_families()
{
    std::uint32_t previous = 0;
    for (std::uint32_t n = 1; n <= 6; ++n) {
        ParityGame g = gen_clique(n);
        const std::uint32_t ad = alternation_depth(g);
        if (ad != n) return fail("ad(clique " + std::to_string(n) + ") = " + std::to_string(ad));
        if (n <= 4 && oracle::alternation_depth(g) != n) return fail("oracle disagrees at clique " + std::to_string(n));
        if (n >= 5 && ad != previous + 1) return fail("no monotone extension at clique " + std::to_string(n));
        previous = ad;
    }
    std::vector<std::uint32_t> ladder;
    for (std::uint32_t n = 1; n <= 3; ++n) ladder.push_back(alternation_depth(gen_recursive_ladder(n)));
    if (!(ladder[0] < ladder[1] && ladder[1] < ladder[2])) return fail("recursive ladder not strictly increasing");
    if (oracle::alternation_depth(gen_recursive_ladder(3)) != ladder[2]) return fail("oracle disagrees on ladder");
    return {true, "clique 1..6 = n; recursive ladder " + std::to_string(ladder[0]) + " < " +
                      std::to_string(ladder[1]) + " < " + std::to_string(ladder[2])};
}

// 7 --------------------------------------------------------------------------

Outcome width_sandwich()
{
    std::size_t graphs = 0;
    auto check = [&](const std::vector<std::vector<VertexId>>& adj) -> std::string {
        ++graphs;
        UndirectedView view(adj);
        const auto lb = treewidth_lower_mmw(view);
        const auto ub = treewidth_upper_greedy_degree(view);
        const auto tw = oracle::treewidth(adj);
        if (lb > tw || tw > ub) {
            return "mmw " + std::to_string(lb) + ", tw " + std::to_string(tw) + ", greedy " + std::to_string(ub) +
                   " on a " + std::to_string(adj.size()) + "-vertex graph";
        }
        return {};
    };

    // every labelled simple graph with at most 6 vertices
    for (std::uint32_t n = 0; n <= 6; ++n) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        }
        for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
            std::vector<std::vector<VertexId>> adj(n);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1U) {
                    adj[pairs[i].first].push_back(pairs[i].second);
                    adj[pairs[i].second].push_back(pairs[i].first);
                }
            }
            if (auto e = check(adj); !e.empty()) return fail(e);
        }
    }
    const std::size_t exhaustive = graphs;

    std::mt19937_64 rng(7007);
    for (std::uint32_t n = 7; n <= 10; ++n) {
        for (int i = 0; i < 2500; ++i) {
            std::bernoulli_distribution edge(0.05 + 0.9 * static_cast<double>(i % 19) / 18.0);
            std::vector<std::vector<VertexId>> adj(n);
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = u + 1; v < n; ++v) {
                    if (edge(rng)) {
                        adj[u].push_back(v);
                        adj[v].push_back(u);
                    }
                }
            }
            if (auto e = check(adj); !e.empty()) return fail(e);
        }
    }

    for (int i = 0; i < 500; ++i) {
        const auto n = 2 + static_cast<std::uint32_t>(rng() % 60);
        std::vector<std::vector<VertexId>> adj(n);
        for (VertexId v = 1; v < n; ++v) {
            if (v > 1 && rng() % 4 == 0) continue;  // vertex 1 always attaches, so there is an edge
            const auto parent = static_cast<VertexId>(rng() % v);
            adj[v].push_back(parent);
            adj[parent].push_back(v);
        }
        if (treewidth_upper_greedy_degree(UndirectedView(adj)) != 1) return fail("greedy degree != 1 on a forest");
    }
    for (std::uint32_t n = 1; n <= 8; ++n) {
        if (treewidth_upper_greedy_degree(gen_clique(n)) != n - 1) return fail("greedy degree on clique");
    }
    return {true, std::to_string(exhaustive) + " exhaustive (n<=6) + " + std::to_string(graphs - exhaustive) +
                      " sampled graphs (n=7..10); 500 forests; cliques 1..8"};
}

// 8 --------------------------------------------------------------------------

Outcome solver_oracle()
{
    std::size_t games = 0;
    std::string problem;
    auto check = [&](const ParityGame& g) {
        ++games;
        WinningPartition w = solve_zielonka(g);
        const auto even = oracle::solve(g);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if ((w.winner(v) == Player::Even) != even[v]) {
                problem = "mismatch at vertex " + std::to_string(v) + " of\n" + write_pgsolver(g);
                return;
            }
        }
    };

    std::mt19937_64 rng(8008);
    // n <= 3: every structure, priority vector and owner vector
    for (std::uint32_t n = 1; n <= 3 && problem.empty(); ++n) {
        for_each_structure(n, 2, [&](const auto& succ) {
            for_each_assignment<Priority>(n, 4, [&](const std::vector<Priority>& prio) {
                for_each_assignment<int>(n, 2, [&](const std::vector<int>& owner) {
                    if (problem.empty()) check(build(prio, owner, succ));
                });
            });
        });
    }
    // n = 4: every structure and priority vector; a sampled owner vector and its complement
    for_each_structure(4, 2, [&](const auto& succ) {
        for_each_assignment<Priority>(4, 4, [&](const std::vector<Priority>& prio) {
            if (!problem.empty()) return;
            std::vector<int> owner(4);
            for (int& o : owner) o = static_cast<int>(rng() % 2);
            check(build(prio, owner, succ));
            for (int& o : owner) o = 1 - o;
            check(build(prio, owner, succ));
        });
    });
    const std::size_t exhaustive = games;
    // n = 5, 6: sampled
    for (std::uint32_t n = 5; n <= 6 && problem.empty(); ++n) {
        const auto choices = testing_support::successor_choices(n, 2);
        for (int i = 0; i < 100000 && problem.empty(); ++i) {
            std::vector<std::vector<VertexId>> succ(n);
            std::vector<Priority> prio(n);
            std::vector<int> owner(n);
            for (VertexId v = 0; v < n; ++v) {
                succ[v] = choices[rng() % choices.size()];
                prio[v] = static_cast<Priority>(rng() % 4);
                owner[v] = static_cast<int>(rng() % 2);
            }
            check(build(prio, owner, succ));
        }
    }
    if (!problem.empty()) return fail(problem);

    for (int i = 0; i < 500; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 200);
        ParityGame g = testing_support::random_game(rng, n, 4, 9);
        std::vector<VertexInfo> info = g.vertices();
        for (auto& vi : info) {
            vi.owner = opponent(vi.owner);
            vi.priority += 1;
        }
        WinningPartition w = solve_zielonka(g);
        WinningPartition d = solve_zielonka(ParityGame(info, lists(g)));
        if (w.won_even != d.won_odd || w.won_odd != d.won_even) return fail("dual check failed on game " + std::to_string(i));
    }
    return {true, std::to_string(exhaustive) + " exhaustive (n<=4) + " + std::to_string(games - exhaustive) +
                      " sampled games; 500 dual checks"};
}

// 9 --------------------------------------------------------------------------

Outcome diamond_counts()
{
    std::mt19937_64 rng(9009);
    std::size_t with_diamond = 0;
    for (int i = 0; i < 100; ++i) {
        const auto n = 1 + static_cast<std::uint32_t>(rng() % 100);
        ParityGame g = testing_support::random_game(rng, n, 1 + static_cast<std::uint32_t>(rng() % 6), 3);
        const DiamondCounts c = count_diamonds(g);
        if (!(c == oracle::diamonds(g))) return fail("count differs on game " + std::to_string(i));
        const bool has = c.total > 0;
        if ((c.even > 0 || c.odd > 0) && !has) return fail("inconsistent classification on game " + std::to_string(i));
        if (c.even + c.odd > c.total) return fail("even + odd exceeds total on game " + std::to_string(i));
        with_diamond += has ? 1 : 0;
    }
    return {true, "100 games, " + std::to_string(with_diamond) + " with diamonds"};
}

// 10 -------------------------------------------------------------------------

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json strip_timing(json doc)
{
    if (doc.is_object()) {
        doc.erase("wall_ms");
        doc.erase("time_ms");
        for (auto& [k, v] : doc.items()) v = strip_timing(v);
    } else if (doc.is_array()) {
        for (auto& v : doc) v = strip_timing(v);
    }
    return doc;
}

Outcome determinism_and_batch()
{
    const std::vector<std::string> specs{
        "random n=500 min_out=1 max_out=5 max_prio=20 seed=1", "random n=2000 min_out=2 max_out=2 max_prio=3 seed=77",
        "clique n=12",  "clique n=5 self_loops=1", "ladder n=40", "recursive_ladder n=30", "mc_ladder n=25",
        "jurdzinski n=6 m=4"};
    for (const auto& s : specs) {
        if (write_pgsolver(generate(parse_generator_spec(s))) != write_pgsolver(generate(parse_generator_spec(s)))) {
            return fail("generator output differs between runs for " + s);
        }
    }

    const fs::path dir = fs::temp_directory_path() / "pgsuite_acceptance_batch";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream(dir / "big.gm") << write_pgsolver(gen_random(10000, 2, 3, 5, 10));
    }
    json manifest{{"defaults", {{"timeout_ms", 120000}}}, {"cases", json::array()}};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        manifest["cases"].push_back({{"id", "gen" + std::to_string(i)}, {"action", "generate"}, {"generate", specs[i]}});
        manifest["cases"].push_back({{"id", "info" + std::to_string(i)}, {"generate", specs[i]}});
        manifest["cases"].push_back({{"id", "solve" + std::to_string(i)}, {"action", "solve"}, {"generate", specs[i]}});
    }
    json with_timeout = manifest;
    with_timeout["cases"].push_back(
        {{"id", "forced_timeout"}, {"input", "big.gm"}, {"measures", "diameter"}, {"timeout_ms", 1}});

    BatchManifest plain = BatchManifest::from_json(manifest, dir);
    BatchManifest timed = BatchManifest::from_json(with_timeout, dir);
    BatchOptions p1;
    p1.results_dir = dir / "p1";
    p1.parallelism = 1;
    BatchOptions p8;
    p8.results_dir = dir / "p8";
    p8.parallelism = 8;
    run_batch(plain, p1);
    BatchSummary s8 = run_batch(timed, p8);

    std::string problem;
    for (const auto& c : plain.cases) {
        const json a = strip_timing(json::parse(slurp(p1.results_dir / (c.id + ".json"))));
        const json b = strip_timing(json::parse(slurp(p8.results_dir / (c.id + ".json"))));
        if (a != b) problem = "result of " + c.id + " differs between parallelism 1 and 8";
        if (a["status"] != "ok") problem = c.id + " did not finish ok";
        if (c.action == CaseAction::Generate) {
            const std::string ga = slurp(p1.results_dir / (c.id + ".gm"));
            const std::string gb = slurp(p8.results_dir / (c.id + ".gm"));
            if (ga != gb || ga != write_pgsolver(generate(*c.generator))) problem = c.id + ".gm differs";
        }
        if (!problem.empty()) break;
    }
    const json forced = json::parse(slurp(p8.results_dir / "forced_timeout.json"));
    if (problem.empty() && forced["status"] != "timeout") problem = "forced case finished with " + forced["status"].dump();
    if (problem.empty() && s8.outcomes.back().status != CaseStatus::Timeout) problem = "summary misses the timeout";
    const json index = json::parse(slurp(p8.results_dir / "index.json"));
    if (problem.empty() && index["cases"].size() != timed.cases.size()) problem = "index incomplete";
    fs::remove_all(dir);
    if (!problem.empty()) return fail(problem);
    return {true, std::to_string(specs.size()) + " specs; " + std::to_string(plain.cases.size()) +
                      " cases identical at parallelism 1 and 8; forced 1 ms case: timeout"};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "format round trip", 60, round_trip},
        {2, "diameter and girth match distance oracles", 120, distance_oracles},
        {3, "girth is 1 exactly when a self-loop exists", 0, girth_self_loop_law},
        {4, "BFS height bounded by diameter", 0, bfs_height_bound},
        {5, "alternation depth matches oracle, ad <= |priorities|", 300, altdepth_oracle},
        {6, "alternation depth of clique and recursive ladder families", 0, altdepth_families},
        {7, "mmw <= treewidth <= greedy degree", 300, width_sandwich},
        {8, "Zielonka matches strategy enumeration; dual check", 600, solver_oracle},
        {9, "diamond counts match brute force", 0, diamond_counts},
        {10, "determinism and batch behaviour", 0, determinism_and_batch},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_s > 0 && secs > c.limit_s) {
            o = fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_s) + " s");
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s %2d  %-58s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
