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


#ifndef PGSUITE_REPORT_HPP
#define PGSUITE_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgsuite/deadline.hpp"
#include "pgsuite/game.hpp"
#include "pgsuite/scc.hpp"
#include "pgsuite/stats.hpp"

namespace pgsuite {

enum class Measure {
    Sizes,
    Degrees,
    Sccs,
    Bfs,
    Dfs,
    Diameter,
    Girth,
    Diamonds,
    Neighbourhoods,
    AlternationDepth,
    TreewidthLower,
    TreewidthUpper,
    KellywidthUpper,
};

const char* to_string(Measure m);
std::optional<Measure> measure_from_string(std::string_view name);
const std::vector<Measure>& all_measures();

/// Everything except the width bounds.
std::set<Measure> default_measures();

/// Parses a comma separated list; "all", "default" and "widths" are accepted as groups.
std::set<Measure> parse_measures(std::string_view list);

enum class MeasureStatus { NotRequested, Ok, Timeout, Skipped, Error };

const char* to_string(MeasureStatus s);

struct MeasureRun
{
    MeasureStatus status = MeasureStatus::NotRequested;
    double time_ms = 0.0;
    std::string note;
};

struct StatsReport
{
    std::string name;
    std::string file;

    std::optional<SizeSummary> sizes;
    std::optional<DegreeSummary> degrees;
    std::optional<SccMetrics> sccs;
    std::optional<VertexId> search_root;
    std::optional<BfsMetrics> bfs;
    std::optional<DfsMetrics> dfs;
    std::optional<std::size_t> diameter;
    std::optional<std::size_t> girth;
    std::optional<DiamondCounts> diamonds;
    std::optional<std::vector<NeighbourhoodSummary>> neighbourhoods;
    std::optional<std::uint32_t> alternation_depth;
    std::optional<std::vector<std::uint32_t>> nesting_depths;  // nd(C) per SCC
    std::optional<std::uint32_t> treewidth_lb;
    std::optional<std::uint32_t> treewidth_ub;
    std::optional<std::uint32_t> kellywidth_ub;

    std::map<Measure, MeasureRun> runs;

    [[nodiscard]] bool timed_out() const;
};

struct ReportOptions
{
    std::set<Measure> measures = default_measures();
    std::vector<std::uint32_t> k_values{1, 2, 3};
    /// Budget for each measure separately.
    std::optional<std::chrono::milliseconds> measure_timeout;
    /// Budget for the whole report.
    Deadline deadline;
    /// Diameter, girth and diamonds are skipped above this many vertices unless forced.
    std::size_t size_cutoff = 100000;
    bool force = false;
    bool include_nesting_depths = false;
    /// BFS/DFS root; defaults to the game's initial vertex.
    std::optional<VertexId> root;
};

StatsReport compute_report(const ParityGame& game, const ReportOptions& options, std::string name = {},
                           std::string file = {});

nlohmann::json to_json(const StatsReport& report);

/// Structural check of a serialized report; empty when the document conforms.
std::vector<std::string> report_schema_errors(const nlohmann::json& doc);

constexpr const char* kReportSchema = "pgsuite.stats/1";

}  // namespace pgsuite

#endif
