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


#ifndef PGSUITE_BATCH_HPP
#define PGSUITE_BATCH_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgsuite/generators.hpp"
#include "pgsuite/report.hpp"

namespace pgsuite {

/// A case either collects statistics, solves a game, or generates one.
enum class CaseAction { Info, Solve, Generate };

const char* to_string(CaseAction a);

struct BatchCase
{
    std::string id;
    CaseAction action = CaseAction::Info;
    std::optional<std::filesystem::path> input;  // absolute, or relative to the working directory
    std::optional<GeneratorSpec> generator;
    std::set<Measure> measures = default_measures();
    std::vector<std::uint32_t> k_values{1, 2, 3};
    std::chrono::milliseconds timeout{3600 * 1000};
    /// Advisory unless the batch runs with process isolation.
    std::uint64_t memory_limit_mb = 32 * 1024;
    bool force = false;
};

class ManifestError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Manifest layout:
 *
 *   { "defaults": { "timeout_ms": ..., "memory_limit_mb": ..., "measures": ..., "k": [...] },
 *     "cases": [ { "id": "...", "action": "info" | "solve" | "generate",
 *                  "input": "game.gm" | "generate": "<generator spec line>",
 *                  "measures": "sizes,girth" | ["sizes", "girth"], "k": [1, 2, 3],
 *                  "timeout_ms": 1000, "memory_limit_mb": 1024, "force": false } ] }
 *
 * Relative input paths are resolved against base_dir. Throws ManifestError
 * on any problem, before anything runs.
 */
struct BatchManifest
{
    std::vector<BatchCase> cases;

    static BatchManifest from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
    static BatchManifest load(const std::filesystem::path& file);
};

BatchCase batch_case_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                               const nlohmann::json& defaults = nlohmann::json::object());
nlohmann::json to_json(const BatchCase& c);

enum class CaseStatus { Ok, Timeout, Error };

const char* to_string(CaseStatus s);

/**
 * Runs one case in the calling thread and returns its result document:
 * { "id", "action", "status", "wall_ms", "source", "result", ["error"] }.
 * Generated games are written to <results_dir>/<id>.gm.
 */
nlohmann::json run_case(const BatchCase& c, const std::filesystem::path& results_dir);

struct BatchOptions
{
    std::filesystem::path results_dir;
    unsigned parallelism = 1;
    /// Run every case in a child process that is killed at twice its timeout.
    bool isolate = false;
    /// Executable providing the hidden `batch-case` subcommand (isolation only).
    std::filesystem::path self_exe;
};

struct CaseOutcome
{
    std::string id;
    CaseStatus status = CaseStatus::Ok;
    double wall_ms = 0.0;
    bool executed = false;  // false when a previous result was reused
};

struct BatchSummary
{
    std::vector<CaseOutcome> outcomes;  // manifest order

    [[nodiscard]] std::size_t executed() const;
};

/// Runs all cases not already completed in results_dir and rewrites index.json.
BatchSummary run_batch(const BatchManifest& manifest, const BatchOptions& options);

/// Child side of an isolated run: loads a case written by to_json, runs it and
/// stores <results_dir>/<id>.json. Returns a process exit code.
int run_case_file(const std::filesystem::path& case_file, const std::filesystem::path& results_dir);

/// Writes text to path through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace pgsuite

#endif
