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


#include "pgsuite/batch.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <regex>
#include <sstream>
#include <thread>

#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include "pgsuite/pgsolver.hpp"
#include "pgsuite/solve.hpp"

namespace pgsuite {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

double elapsed_ms(Deadline::Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Deadline::Clock::now() - start).count();
}

std::set<Measure> measures_from_json(const json& v)
{
    if (v.is_string()) return parse_measures(v.get<std::string>());
    if (v.is_array()) {
        std::string joined;
        for (const auto& item : v) {
            if (!item.is_string()) throw ManifestError("measure names must be strings");
            joined += item.get<std::string>() + ",";
        }
        return parse_measures(joined);
    }
    throw ManifestError("'measures' must be a string or an array of strings");
}

GeneratorSpec generator_from_json(const json& v)
{
    if (v.is_string()) return parse_generator_spec(v.get<std::string>());
    if (!v.is_object()) throw ManifestError("'generate' must be a spec string or an object");
    std::string line = v.at("family").get<std::string>();
    for (const auto& [key, value] : v.items()) {
        if (key == "family") continue;
        if (value.is_boolean()) {
            line += " " + key + "=" + (value.get<bool>() ? "1" : "0");
        } else if (value.is_number_unsigned()) {
            line += " " + key + "=" + std::to_string(value.get<std::uint64_t>());
        } else {
            throw ManifestError("generator parameter '" + key + "' must be a non-negative integer");
        }
    }
    return parse_generator_spec(line);
}

CaseStatus status_from_string(const std::string& s)
{
    if (s == "ok") return CaseStatus::Ok;
    if (s == "timeout") return CaseStatus::Timeout;
    return CaseStatus::Error;
}

json error_result(const BatchCase& c, CaseStatus status, double wall_ms, const std::string& message)
{
    json doc{{"id", c.id},
             {"action", to_string(c.action)},
             {"status", to_string(status)},
             {"wall_ms", wall_ms},
             {"result", nullptr},
             {"error", message}};
    doc["source"] = c.input ? json{{"input", c.input->string()}}
                            : json{{"generator", to_string(*c.generator)}};
    return doc;
}

std::optional<json> read_result(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json doc = json::parse(in);
        if (doc.is_object() && doc.contains("status") && doc["status"].is_string()) return doc;
    } catch (const json::exception&) {
    }
    return std::nullopt;
}

json run_isolated(const BatchCase& c, const BatchOptions& options)
{
    const fs::path result_path = options.results_dir / (c.id + ".json");
    const fs::path case_path = options.results_dir / ("." + c.id + ".case.json");
    write_file_atomic(case_path, to_json(c).dump());
    fs::remove(result_path);

    const std::string exe = options.self_exe.string();
    const std::string case_arg = case_path.string();
    const std::string dir_arg = options.results_dir.string();
    std::vector<char*> argv{const_cast<char*>(exe.c_str()), const_cast<char*>("batch-case"),
                            const_cast<char*>(case_arg.c_str()), const_cast<char*>(dir_arg.c_str()), nullptr};
    const rlim_t limit = static_cast<rlim_t>(c.memory_limit_mb) * 1024 * 1024;

    const auto start = Deadline::Clock::now();
    const pid_t pid = fork();
    if (pid < 0) return error_result(c, CaseStatus::Error, 0.0, "fork failed");
    if (pid == 0) {
        if (c.memory_limit_mb > 0) {
            rlimit rl{limit, limit};
            setrlimit(RLIMIT_AS, &rl);
        }
        execv(argv[0], argv.data());
        _exit(127);
    }

    const auto hard_limit = 2 * c.timeout;
    int wstatus = 0;
    bool killed = false;
    for (;;) {
        const pid_t r = waitpid(pid, &wstatus, WNOHANG);
        if (r == pid) break;
        if (Deadline::Clock::now() - start > hard_limit) {
            kill(pid, SIGKILL);
            waitpid(pid, &wstatus, 0);
            killed = true;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    const double wall = elapsed_ms(start);
    fs::remove(case_path);

    if (killed) return error_result(c, CaseStatus::Timeout, wall, "killed after exceeding twice the timeout");
    if (auto doc = read_result(result_path)) return *doc;
    std::string why = "child process failed";
    if (WIFSIGNALED(wstatus)) why += " with signal " + std::to_string(WTERMSIG(wstatus));
    if (WIFEXITED(wstatus)) why += " with exit code " + std::to_string(WEXITSTATUS(wstatus));
    return error_result(c, CaseStatus::Error, wall, why);
}

}  // namespace

const char* to_string(CaseAction a)
{
    switch (a) {
    case CaseAction::Info: return "info";
    case CaseAction::Solve: return "solve";
    case CaseAction::Generate: return "generate";
    }
    return "unknown";
}

const char* to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::Ok: return "ok";
    case CaseStatus::Timeout: return "timeout";
    case CaseStatus::Error: return "error";
    }
    return "unknown";
}

BatchCase batch_case_from_json(const json& doc, const fs::path& base_dir, const json& defaults)
{
    if (!doc.is_object()) throw ManifestError("case must be an object");
    BatchCase c;
    try {
        auto get = [&](const char* key) -> const json* {
            if (doc.contains(key)) return &doc[key];
            if (defaults.contains(key)) return &defaults[key];
            return nullptr;
        };
        if (!doc.contains("id") || !doc["id"].is_string()) throw ManifestError("case without string 'id'");
        c.id = doc["id"].get<std::string>();
        static const std::regex safe("[A-Za-z0-9._-]+");
        if (!std::regex_match(c.id, safe) || c.id.front() == '.') {
            throw ManifestError("case id '" + c.id + "' must match [A-Za-z0-9._-]+ and not start with '.'");
        }

        const std::string action = doc.value("action", "info");
        if (action == "info") {
            c.action = CaseAction::Info;
        } else if (action == "solve") {
            c.action = CaseAction::Solve;
        } else if (action == "generate") {
            c.action = CaseAction::Generate;
        } else {
            throw ManifestError("unknown action '" + action + "'");
        }

        if (doc.contains("input") == doc.contains("generate")) {
            throw ManifestError("exactly one of 'input' and 'generate' is required");
        }
        if (doc.contains("input")) {
            fs::path p = doc["input"].get<std::string>();
            c.input = p.is_absolute() ? p : base_dir / p;
            if (c.action == CaseAction::Generate) throw ManifestError("'generate' action needs a generator spec");
        } else {
            c.generator = generator_from_json(doc["generate"]);
            check(*c.generator);
        }
        if (const json* m = get("measures")) c.measures = measures_from_json(*m);
        if (const json* k = get("k")) {
            c.k_values = k->get<std::vector<std::uint32_t>>();
            for (auto kv : c.k_values) {
                if (kv == 0) throw ManifestError("k values must be positive");
            }
        }
        if (const json* t = get("timeout_ms")) c.timeout = std::chrono::milliseconds(t->get<std::uint64_t>());
        if (const json* mem = get("memory_limit_mb")) c.memory_limit_mb = mem->get<std::uint64_t>();
        if (const json* f = get("force")) c.force = f->get<bool>();
    } catch (const json::exception& ex) {
        throw ManifestError("case '" + c.id + "': " + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ManifestError("case '" + c.id + "': " + ex.what());
    }
    return c;
}

json to_json(const BatchCase& c)
{
    json doc{{"id", c.id},
             {"action", to_string(c.action)},
             {"k", c.k_values},
             {"timeout_ms", c.timeout.count()},
             {"memory_limit_mb", c.memory_limit_mb},
             {"force", c.force}};
    json measures = json::array();
    for (Measure m : c.measures) measures.push_back(to_string(m));
    doc["measures"] = measures;
    if (c.input) doc["input"] = c.input->string();
    if (c.generator) doc["generate"] = to_string(*c.generator);
    return doc;
}

BatchManifest BatchManifest::from_json(const json& doc, const fs::path& base_dir)
{
    if (!doc.is_object() || !doc.contains("cases") || !doc["cases"].is_array()) {
        throw ManifestError("manifest must be an object with a 'cases' array");
    }
    const json defaults = doc.value("defaults", json::object());
    if (!defaults.is_object()) throw ManifestError("'defaults' must be an object");
    BatchManifest m;
    std::set<std::string> ids;
    for (const auto& item : doc["cases"]) {
        BatchCase c = batch_case_from_json(item, base_dir, defaults);
        if (!ids.insert(c.id).second) throw ManifestError("duplicate case id '" + c.id + "'");
        m.cases.push_back(std::move(c));
    }
    return m;
}

BatchManifest BatchManifest::load(const fs::path& file)
{
    std::ifstream in(file);
    if (!in) throw ManifestError("cannot open manifest '" + file.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw ManifestError("manifest '" + file.string() + "': " + ex.what());
    }
    return from_json(doc, file.parent_path());
}

std::size_t BatchSummary::executed() const
{
    std::size_t n = 0;
    for (const auto& o : outcomes) n += o.executed ? 1 : 0;
    return n;
}

void write_file_atomic(const fs::path& path, const std::string& text)
{
    std::ostringstream suffix;
    suffix << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
    const fs::path tmp = path.string() + suffix.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << text;
        if (!out.flush()) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

json run_case(const BatchCase& c, const fs::path& results_dir)
{
    const auto start = Deadline::Clock::now();
    const Deadline deadline = Deadline::after(c.timeout);
    json doc{{"id", c.id}, {"action", to_string(c.action)}, {"memory_limit_mb", c.memory_limit_mb}};
    doc["source"] = c.input ? json{{"input", c.input->string()}} : json{{"generator", to_string(*c.generator)}};

    CaseStatus status = CaseStatus::Ok;
    try {
        ParityGame game;
        std::string name;
        if (c.input) {
            game = read_pgsolver_file(*c.input).game;
            name = c.input->filename().string();
        } else {
            game = generate(*c.generator);
            name = to_string(*c.generator);
        }

        switch (c.action) {
        case CaseAction::Info: {
            ReportOptions opts;
            opts.measures = c.measures;
            opts.k_values = c.k_values;
            opts.deadline = deadline;
            opts.force = c.force;
            StatsReport report = compute_report(game, opts, name, c.input ? c.input->string() : "");
            doc["result"] = to_json(report);
            if (report.timed_out()) status = CaseStatus::Timeout;
            break;
        }
        case CaseAction::Solve: {
            SolveOptions opts;
            opts.deadline = deadline;
            WinningPartition w = solve_zielonka(game, opts);
            doc["result"] = {{"won_even", w.won_even}, {"won_odd", w.won_odd}};
            break;
        }
        case CaseAction::Generate: {
            const fs::path out = results_dir / (c.id + ".gm");
            write_file_atomic(out, write_pgsolver(game));
            doc["result"] = {{"file", out.filename().string()},
                             {"num_vertices", game.num_vertices()},
                             {"num_edges", game.num_edges()}};
            break;
        }
        }
    } catch (const Timeout&) {
        status = CaseStatus::Timeout;
        doc["result"] = nullptr;
        doc["error"] = "deadline exceeded";
    } catch (const std::exception& ex) {
        status = CaseStatus::Error;
        doc["result"] = nullptr;
        doc["error"] = ex.what();
    }
    doc["status"] = to_string(status);
    doc["wall_ms"] = elapsed_ms(start);
    return doc;
}

int run_case_file(const fs::path& case_file, const fs::path& results_dir)
{
    std::ifstream in(case_file);
    if (!in) return 2;
    BatchCase c;
    try {
        c = batch_case_from_json(json::parse(in), {});
    } catch (const std::exception&) {
        return 2;
    }
    json doc = run_case(c, results_dir);
    write_file_atomic(results_dir / (c.id + ".json"), doc.dump(2) + "\n");
    return 0;
}

BatchSummary run_batch(const BatchManifest& manifest, const BatchOptions& options)
{
    fs::create_directories(options.results_dir);
    const std::size_t count = manifest.cases.size();
    BatchSummary summary;
    summary.outcomes.resize(count);

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < count; ++i) {
        const BatchCase& c = manifest.cases[i];
        summary.outcomes[i].id = c.id;
        if (auto previous = read_result(options.results_dir / (c.id + ".json"))) {
            summary.outcomes[i].status = status_from_string((*previous)["status"].get<std::string>());
            summary.outcomes[i].wall_ms = previous->value("wall_ms", 0.0);
        } else {
            pending.push_back(i);
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= pending.size()) return;
            const std::size_t i = pending[slot];
            const BatchCase& c = manifest.cases[i];
            try {
                json doc = options.isolate ? run_isolated(c, options) : run_case(c, options.results_dir);
                write_file_atomic(options.results_dir / (c.id + ".json"), doc.dump(2) + "\n");
                CaseOutcome& o = summary.outcomes[i];
                o.status = status_from_string(doc["status"].get<std::string>());
                o.wall_ms = doc.value("wall_ms", 0.0);
                o.executed = true;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const unsigned threads = std::max(1U, std::min<unsigned>(options.parallelism, static_cast<unsigned>(pending.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    json index{{"cases", json::array()}};
    for (const auto& o : summary.outcomes) {
        index["cases"].push_back(
            {{"id", o.id}, {"status", to_string(o.status)}, {"wall_ms", o.wall_ms}, {"file", o.id + ".json"}});
    }
    write_file_atomic(options.results_dir / "index.json", index.dump(2) + "\n");
    return summary;
}

}  // namespace pgsuite
