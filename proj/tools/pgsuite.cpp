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


#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pgsuite/batch.hpp"
#include "pgsuite/generators.hpp"
#include "pgsuite/pgsolver.hpp"
#include "pgsuite/report.hpp"
#include "pgsuite/solve.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace pgsuite;

namespace {

constexpr int kInputError = 2;

struct InfoArgs
{
    std::string file;
    std::string measures = "default";
    std::vector<std::uint32_t> k{1, 2, 3};
    double timeout_s = 0;
    std::string json_out;
    std::size_t cutoff = 100000;
    bool force = false;
    bool nesting = false;
    bool renumber = false;
    bool compact = false;
};

struct GenerateArgs
{
    std::string family;
    GeneratorSpec spec;
    std::string out;
};

struct SolveArgs
{
    std::string file;
    bool summary = false;
    double timeout_s = 0;
    std::size_t max_depth = 0;
    bool renumber = false;
};

struct BatchArgs
{
    std::string manifest;
    std::string out = "results";
    unsigned parallelism = 1;
    bool isolate = false;
};

struct BatchCaseArgs
{
    std::string case_file;
    std::string results_dir;
};

std::chrono::milliseconds seconds_to_ms(double s)
{
    return std::chrono::milliseconds(static_cast<std::int64_t>(s * 1000.0));
}

ParityGame load(const std::string& file, bool renumber)
{
    ParseOptions opts;
    opts.renumber = renumber;
    ParseResult r = read_pgsolver_file(file, opts);
    for (const auto& w : r.warnings) std::cerr << file << ": warning: " << w.message << "\n";
    return std::move(r.game);
}

int cmd_info(const InfoArgs& a)
{
    ReportOptions opts;
    opts.measures = parse_measures(a.measures);
    opts.k_values = a.k;
    if (a.timeout_s > 0) opts.measure_timeout = seconds_to_ms(a.timeout_s);
    opts.size_cutoff = a.cutoff;
    opts.force = a.force;
    opts.include_nesting_depths = a.nesting;

    ParityGame game = load(a.file, a.renumber);
    StatsReport report = compute_report(game, opts, fs::path(a.file).filename().string(), a.file);
    const std::string text = to_json(report).dump(a.compact ? -1 : 2) + "\n";
    if (a.json_out.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(a.json_out, text);
    }
    for (const auto& [measure, run] : report.runs) {
        if (run.status == MeasureStatus::Timeout) std::cerr << to_string(measure) << ": timed out\n";
    }
    return 0;
}

int cmd_generate(GenerateArgs a)
{
    auto family = family_from_string(a.family);
    if (!family) throw std::invalid_argument("unknown family '" + a.family + "'");
    a.spec.family = *family;
    check(a.spec);
    ParityGame game = generate(a.spec);
    if (a.out.empty()) {
        write_pgsolver(game, std::cout);
        std::cerr << to_string(a.spec) << "\n";
    } else {
        write_file_atomic(a.out, write_pgsolver(game));
        std::cout << to_string(a.spec) << "\n";
    }
    return 0;
}

int cmd_solve(const SolveArgs& a)
{
    ParityGame game = load(a.file, a.renumber);
    SolveOptions opts;
    opts.max_depth = a.max_depth;
    if (a.timeout_s > 0) opts.deadline = Deadline::after(seconds_to_ms(a.timeout_s));
    const auto start = std::chrono::steady_clock::now();
    WinningPartition w = solve_zielonka(game, opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (a.summary) {
        if (game.empty()) {
            std::cout << "empty game, solved in " << ms << " ms\n";
        } else {
            const VertexId v = *game.initial_vertex();
            std::cout << "vertex " << v << " won by " << to_string(w.winner(v)) << " (" << w.won_even.size()
                      << " even, " << w.won_odd.size() << " odd, " << ms << " ms)\n";
        }
    } else {
        json doc{{"won_even", w.won_even}, {"won_odd", w.won_odd}, {"time_ms", ms}};
        std::cout << doc.dump() << "\n";
    }
    return 0;
}

int cmd_batch(const BatchArgs& a)
{
    BatchManifest manifest = BatchManifest::load(a.manifest);
    BatchOptions opts;
    opts.results_dir = a.out;
    opts.parallelism = a.parallelism;
    opts.isolate = a.isolate;
    if (a.isolate) opts.self_exe = fs::read_symlink("/proc/self/exe");
    BatchSummary s = run_batch(manifest, opts);
    std::size_t ok = 0;
    std::size_t timeouts = 0;
    std::size_t errors = 0;
    for (const auto& o : s.outcomes) {
        ok += o.status == CaseStatus::Ok;
        timeouts += o.status == CaseStatus::Timeout;
        errors += o.status == CaseStatus::Error;
    }
    std::cout << s.outcomes.size() << " cases, " << s.executed() << " executed: " << ok << " ok, " << timeouts
              << " timeout, " << errors << " error\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pgsuite: parity game statistics, generators and batch runs"};
    app.require_subcommand(1);

    InfoArgs info;
    auto* info_cmd = app.add_subcommand("info", "Compute structural measures of a game");
    info_cmd->add_option("file", info.file, "Game in PGSolver format (plain or bzip2)")->required();
    info_cmd->add_option("--measures", info.measures,
                         "Comma separated measures; groups: default, all, widths");
    info_cmd->add_option("--k", info.k, "Neighbourhood radii")->delimiter(',');
    info_cmd->add_option("--timeout", info.timeout_s, "Time budget per measure in seconds (0 = none)");
    info_cmd->add_option("--json", info.json_out, "Write the report here instead of stdout");
    info_cmd->add_option("--size-cutoff", info.cutoff, "Skip diameter, girth and diamonds above this many vertices");
    info_cmd->add_flag("--force", info.force, "Ignore the size cutoff");
    info_cmd->add_flag("--nesting-depths", info.nesting, "Include the nesting depth of every SCC");
    info_cmd->add_flag("--renumber", info.renumber, "Accept non-contiguous vertex ids");
    info_cmd->add_flag("--compact", info.compact, "Single-line JSON");

    GenerateArgs gen;
    auto* gen_cmd = app.add_subcommand("generate", "Generate a game");
    gen_cmd->add_option("family", gen.family, "random, clique, ladder, recursive_ladder, mc_ladder or jurdzinski")
        ->required();
    gen_cmd->add_option("--n", gen.spec.n, "Size parameter (vertices, rungs, positions or layers)");
    gen_cmd->add_option("--m", gen.spec.m, "Blocks per layer (jurdzinski)");
    gen_cmd->add_option("--min-out", gen.spec.min_out, "Minimum out-degree (random)");
    gen_cmd->add_option("--max-out", gen.spec.max_out, "Maximum out-degree (random)");
    gen_cmd->add_option("--max-prio", gen.spec.max_prio, "Largest priority (random)");
    gen_cmd->add_option("--seed", gen.spec.seed, "Seed (random)");
    gen_cmd->add_flag("--self-loops", gen.spec.self_loops, "Add self-loops (clique)");
    gen_cmd->add_option("-o,--output", gen.out, "Output file; stdout when omitted");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game with Zielonka's algorithm");
    solve_cmd->add_option("file", solve.file, "Game in PGSolver format (plain or bzip2)")->required();
    solve_cmd->add_flag("--summary", solve.summary, "Print the winner of the initial vertex only");
    solve_cmd->add_option("--timeout", solve.timeout_s, "Time budget in seconds (0 = none)");
    solve_cmd->add_option("--max-depth", solve.max_depth, "Recursion depth budget (0 = none)");
    solve_cmd->add_flag("--renumber", solve.renumber, "Accept non-contiguous vertex ids");

    BatchArgs batch;
    auto* batch_cmd = app.add_subcommand("batch", "Run the cases of a manifest");
    batch_cmd->add_option("manifest", batch.manifest, "Manifest file (JSON)")->required();
    batch_cmd->add_option("-o,--out", batch.out, "Results directory");
    batch_cmd->add_option("-j,--parallelism", batch.parallelism, "Cases in flight")->check(CLI::PositiveNumber);
    batch_cmd->add_flag("--isolate", batch.isolate, "Run each case in a child process with hard limits");

    BatchCaseArgs batch_case;
    auto* case_cmd = app.add_subcommand("batch-case");
    case_cmd->group("");
    case_cmd->add_option("case", batch_case.case_file)->required();
    case_cmd->add_option("results", batch_case.results_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*info_cmd) return cmd_info(info);
        if (*gen_cmd) return cmd_generate(gen);
        if (*solve_cmd) return cmd_solve(solve);
        if (*batch_cmd) return cmd_batch(batch);
        if (*case_cmd) return run_case_file(batch_case.case_file, batch_case.results_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ManifestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Timeout&) {
        std::cerr << "error: time budget exceeded\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
