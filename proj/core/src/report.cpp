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


#include "pgsuite/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pgsuite/altdepth.hpp"
#include "pgsuite/width.hpp"

namespace pgsuite {

namespace {

using json = nlohmann::json;

const std::vector<std::pair<Measure, const char*>>& measure_names()
{
    static const std::vector<std::pair<Measure, const char*>> names{
        {Measure::Sizes, "sizes"},
        {Measure::Degrees, "degrees"},
        {Measure::Sccs, "sccs"},
        {Measure::Bfs, "bfs"},
        {Measure::Dfs, "dfs"},
        {Measure::Diameter, "diameter"},
        {Measure::Girth, "girth"},
        {Measure::Diamonds, "diamonds"},
        {Measure::Neighbourhoods, "neighbourhoods"},
        {Measure::AlternationDepth, "alternation_depth"},
        {Measure::TreewidthLower, "treewidth_lb"},
        {Measure::TreewidthUpper, "treewidth_ub"},
        {Measure::KellywidthUpper, "kellywidth_ub"},
    };
    return names;
}

json to_json(const MinMaxAvg& m)
{
    return {{"min", m.min}, {"max", m.max}, {"avg", m.avg}};
}

template <class T, class F>
json optional_json(const std::optional<T>& value, F&& convert)
{
    return value ? convert(*value) : json(nullptr);
}

}  // namespace

const char* to_string(Measure m)
{
    for (const auto& [measure, name] : measure_names()) {
        if (measure == m) return name;
    }
    return "unknown";
}

std::optional<Measure> measure_from_string(std::string_view name)
{
    for (const auto& [measure, text] : measure_names()) {
        if (name == text) return measure;
    }
    return std::nullopt;
}

const std::vector<Measure>& all_measures()
{
    static const std::vector<Measure> all = [] {
        std::vector<Measure> out;
        for (const auto& [m, name] : measure_names()) out.push_back(m);
        return out;
    }();
    return all;
}

std::set<Measure> default_measures()
{
    std::set<Measure> out(all_measures().begin(), all_measures().end());
    out.erase(Measure::TreewidthLower);
    out.erase(Measure::TreewidthUpper);
    out.erase(Measure::KellywidthUpper);
    return out;
}

std::set<Measure> parse_measures(std::string_view list)
{
    std::set<Measure> out;
    std::string item;
    std::istringstream in{std::string(list)};
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        if (item == "all") {
            out.insert(all_measures().begin(), all_measures().end());
        } else if (item == "default") {
            auto d = default_measures();
            out.insert(d.begin(), d.end());
        } else if (item == "widths") {
            out.insert({Measure::TreewidthLower, Measure::TreewidthUpper, Measure::KellywidthUpper});
        } else if (auto m = measure_from_string(item)) {
            out.insert(*m);
        } else {
            throw std::invalid_argument("unknown measure '" + item + "'");
        }
    }
    return out;
}

const char* to_string(MeasureStatus s)
{
    switch (s) {
    case MeasureStatus::NotRequested: return "not_requested";
    case MeasureStatus::Ok: return "ok";
    case MeasureStatus::Timeout: return "timeout";
    case MeasureStatus::Skipped: return "skipped";
    case MeasureStatus::Error: return "error";
    }
    return "unknown";
}

bool StatsReport::timed_out() const
{
    return std::any_of(runs.begin(), runs.end(),
                       [](const auto& kv) { return kv.second.status == MeasureStatus::Timeout; });
}

StatsReport compute_report(const ParityGame& game, const ReportOptions& options, std::string name, std::string file)
{
    StatsReport r;
    r.name = std::move(name);
    r.file = std::move(file);
    for (Measure m : all_measures()) r.runs[m] = {};

    const bool large = game.num_vertices() > options.size_cutoff && !options.force;
    std::optional<SccDecomposition> sccs;
    auto decomposition = [&]() -> const SccDecomposition& {
        if (!sccs) sccs = scc_decompose(game);
        return *sccs;
    };

    auto run = [&](Measure m, auto&& body) {
        if (!options.measures.contains(m)) return;
        MeasureRun& out = r.runs[m];
        Deadline deadline = options.deadline;
        if (options.measure_timeout) deadline = deadline.min(Deadline::after(*options.measure_timeout));
        const auto start = Deadline::Clock::now();
        try {
            deadline.check();
            body(deadline);
            out.status = MeasureStatus::Ok;
        } catch (const Timeout&) {
            out.status = MeasureStatus::Timeout;
        } catch (const std::exception& ex) {
            out.status = MeasureStatus::Error;
            out.note = ex.what();
        }
        out.time_ms = std::chrono::duration<double, std::milli>(Deadline::Clock::now() - start).count();
    };
    auto skip = [&](Measure m, const char* why) {
        if (!options.measures.contains(m)) return false;
        r.runs[m].status = MeasureStatus::Skipped;
        r.runs[m].note = why;
        return true;
    };

    run(Measure::Sizes, [&](const Deadline&) { r.sizes = size_summary(game); });
    run(Measure::Degrees, [&](const Deadline&) { r.degrees = degree_summary(game); });
    run(Measure::Sccs, [&](const Deadline&) { r.sccs = scc_metrics(decomposition()); });

    const auto root = options.root ? options.root : game.initial_vertex();
    if (!root) {
        skip(Measure::Bfs, "empty game");
        skip(Measure::Dfs, "empty game");
    } else {
        r.search_root = root;
        run(Measure::Bfs, [&](const Deadline&) { r.bfs = bfs_metrics(game, *root); });
        run(Measure::Dfs, [&](const Deadline&) { r.dfs = dfs_metrics(game, *root); });
    }

    if (large) {
        skip(Measure::Diameter, "above size cutoff");
        skip(Measure::Girth, "above size cutoff");
        skip(Measure::Diamonds, "above size cutoff");
    } else {
        run(Measure::Diameter, [&](const Deadline& d) { r.diameter = diameter(game, d); });
        run(Measure::Girth, [&](const Deadline& d) { r.girth = girth(game, d); });
        run(Measure::Diamonds, [&](const Deadline& d) { r.diamonds = count_diamonds(game, d); });
    }

    run(Measure::Neighbourhoods, [&](const Deadline& d) {
        std::vector<NeighbourhoodSummary> all;
        for (std::uint32_t k : options.k_values) all.push_back(neighbourhood_summary(game, k, d));
        r.neighbourhoods = std::move(all);
    });
    run(Measure::AlternationDepth, [&](const Deadline& d) {
        auto ad = alternation_depth_detailed(game, decomposition(), d);
        r.alternation_depth = ad.alternation_depth;
        if (options.include_nesting_depths) r.nesting_depths = std::move(ad.per_component);
    });

    run(Measure::TreewidthLower, [&](const Deadline& d) { r.treewidth_lb = treewidth_lower_mmw(game, d); });
    run(Measure::TreewidthUpper,
        [&](const Deadline& d) { r.treewidth_ub = treewidth_upper_greedy_degree(game, d); });
    run(Measure::KellywidthUpper, [&](const Deadline& d) { r.kellywidth_ub = kellywidth_upper(game, d); });
    return r;
}

json to_json(const StatsReport& r)
{
    json doc;
    doc["schema"] = kReportSchema;
    doc["game"] = {{"name", r.name}, {"file", r.file}};

    doc["sizes"] = optional_json(r.sizes, [](const SizeSummary& s) {
        json per = json::object();
        for (const auto& [prio, count] : s.count_per_priority) per[std::to_string(prio)] = count;
        return json{{"num_vertices", s.num_vertices},
                    {"num_even_vertices", s.num_even_vertices},
                    {"num_odd_vertices", s.num_odd_vertices},
                    {"num_edges", s.num_edges},
                    {"num_priorities", s.num_priorities},
                    {"count_per_priority", per},
                    {"is_solitaire", s.is_solitaire}};
    });
    doc["degrees"] = optional_json(r.degrees, [](const DegreeSummary& d) {
        return json{{"in", to_json(d.in)}, {"out", to_json(d.out)}, {"degree", to_json(d.degree)}};
    });
    doc["sccs"] = optional_json(r.sccs, [](const SccMetrics& m) {
        return json{{"num_sccs", m.num_sccs},
                    {"num_trivial", m.num_trivial},
                    {"num_nontrivial", m.num_sccs - m.num_trivial},
                    {"num_terminal", m.num_terminal},
                    {"quotient_height", m.quotient_height}};
    });
    const json root = r.search_root ? json(*r.search_root) : json(nullptr);
    doc["bfs"] = optional_json(r.bfs, [&](const BfsMetrics& b) {
        return json{{"root", root},
                    {"height", b.height},
                    {"vertices_per_level", b.vertices_per_level},
                    {"max_queue_size", b.max_queue_size},
                    {"back_level_edge_count", b.back_level_edge_count},
                    {"max_back_level_edge_length", b.max_back_level_edge_length},
                    {"same_level_edge_count", b.same_level_edge_count},
                    {"unreachable_count", b.unreachable_count}};
    });
    doc["dfs"] = optional_json(r.dfs, [&](const DfsMetrics& d) {
        return json{{"root", root},
                    {"max_stack_size", d.max_stack_size},
                    {"tree_edges", d.tree_edges},
                    {"back_edges", d.back_edges},
                    {"forward_edges", d.forward_edges},
                    {"cross_edges", d.cross_edges},
                    {"visited", d.visited}};
    });
    doc["diameter"] = optional_json(r.diameter, [](std::size_t v) { return json(v); });
    doc["girth"] = optional_json(r.girth, [](std::size_t v) { return json(v); });
    doc["diamonds"] = optional_json(r.diamonds, [](const DiamondCounts& c) {
        return json{{"total", c.total}, {"even", c.even}, {"odd", c.odd}};
    });
    doc["neighbourhoods"] = optional_json(r.neighbourhoods, [](const std::vector<NeighbourhoodSummary>& all) {
        json out = json::object();
        for (const auto& s : all) {
            out[std::to_string(s.k)] = {{"min_size", s.min_size},
                                        {"max_size", s.max_size},
                                        {"avg_size", s.avg_size},
                                        {"min_clustering", s.min_clustering},
                                        {"max_clustering", s.max_clustering},
                                        {"avg_clustering", s.avg_clustering}};
        }
        return out;
    });
    doc["alternation_depth"] = optional_json(r.alternation_depth, [](std::uint32_t v) { return json(v); });
    doc["nesting_depth"] =
        optional_json(r.nesting_depths, [](const std::vector<std::uint32_t>& v) { return json(v); });
    doc["treewidth_lb"] = optional_json(r.treewidth_lb, [](std::uint32_t v) { return json(v); });
    doc["treewidth_ub"] = optional_json(r.treewidth_ub, [](std::uint32_t v) { return json(v); });
    doc["kellywidth_ub"] = optional_json(r.kellywidth_ub, [](std::uint32_t v) { return json(v); });

    json measures = json::object();
    for (const auto& [m, run] : r.runs) {
        json entry{{"status", to_string(run.status)}, {"time_ms", run.time_ms}};
        if (!run.note.empty()) entry["note"] = run.note;
        measures[to_string(m)] = entry;
    }
    doc["measures"] = measures;
    doc["timed_out"] = r.timed_out();
    return doc;
}

namespace {

class SchemaChecker
{
public:
    explicit SchemaChecker(std::vector<std::string>& errors) : errors_(errors) {}

    void fail(const std::string& path, const std::string& what) { errors_.push_back(path + ": " + what); }

    bool object(const json& doc, const std::string& path, std::initializer_list<const char*> keys)
    {
        if (!doc.is_object()) {
            fail(path, "expected object");
            return false;
        }
        bool complete = true;
        for (const char* k : keys) {
            if (!doc.contains(k)) {
                fail(path, std::string("missing key '") + k + "'");
                complete = false;
            }
        }
        return complete;
    }

    void unsigned_int(const json& doc, const std::string& path, const char* key, bool nullable = false)
    {
        if (!doc.is_object() || !doc.contains(key)) return;
        const json& v = doc.at(key);
        if (nullable && v.is_null()) return;
        if (!v.is_number_unsigned()) fail(path + "." + key, "expected non-negative integer");
    }

    void number(const json& doc, const std::string& path, const char* key)
    {
        if (!doc.is_object() || !doc.contains(key)) return;
        if (!doc.at(key).is_number()) fail(path + "." + key, "expected number");
    }

    void min_max_avg(const json& doc, const std::string& path)
    {
        if (!object(doc, path, {"min", "max", "avg"})) return;
        unsigned_int(doc, path, "min");
        unsigned_int(doc, path, "max");
        number(doc, path, "avg");
    }

private:
    std::vector<std::string>& errors_;
};

}  // namespace

std::vector<std::string> report_schema_errors(const json& doc)
{
    std::vector<std::string> errors;
    SchemaChecker c(errors);
    if (!c.object(doc, "$",
                  {"schema", "game", "sizes", "degrees", "sccs", "bfs", "dfs", "diameter", "girth", "diamonds",
                   "neighbourhoods", "alternation_depth", "nesting_depth", "treewidth_lb", "treewidth_ub",
                   "kellywidth_ub", "measures", "timed_out"})) {
        return errors;
    }
    if (doc.value("schema", "") != kReportSchema) c.fail("$.schema", "unexpected schema tag");
    if (c.object(doc["game"], "$.game", {"name", "file"})) {
        if (!doc["game"]["name"].is_string()) c.fail("$.game.name", "expected string");
        if (!doc["game"]["file"].is_string()) c.fail("$.game.file", "expected string");
    }
    if (!doc["timed_out"].is_boolean()) c.fail("$.timed_out", "expected boolean");

    if (const json& s = doc["sizes"]; !s.is_null()) {
        if (c.object(s, "$.sizes",
                     {"num_vertices", "num_even_vertices", "num_odd_vertices", "num_edges", "num_priorities",
                      "count_per_priority", "is_solitaire"})) {
            for (const char* k : {"num_vertices", "num_even_vertices", "num_odd_vertices", "num_edges",
                                  "num_priorities"}) {
                c.unsigned_int(s, "$.sizes", k);
            }
            if (!s["count_per_priority"].is_object()) c.fail("$.sizes.count_per_priority", "expected object");
            if (!s["is_solitaire"].is_boolean()) c.fail("$.sizes.is_solitaire", "expected boolean");
        }
    }
    if (const json& d = doc["degrees"]; !d.is_null()) {
        if (c.object(d, "$.degrees", {"in", "out", "degree"})) {
            for (const char* k : {"in", "out", "degree"}) c.min_max_avg(d[k], std::string("$.degrees.") + k);
        }
    }
    if (const json& s = doc["sccs"]; !s.is_null()) {
        if (c.object(s, "$.sccs", {"num_sccs", "num_trivial", "num_nontrivial", "num_terminal", "quotient_height"})) {
            for (const char* k : {"num_sccs", "num_trivial", "num_nontrivial", "num_terminal", "quotient_height"}) {
                c.unsigned_int(s, "$.sccs", k);
            }
        }
    }
    if (const json& b = doc["bfs"]; !b.is_null()) {
        if (c.object(b, "$.bfs",
                     {"root", "height", "vertices_per_level", "max_queue_size", "back_level_edge_count",
                      "max_back_level_edge_length", "same_level_edge_count", "unreachable_count"})) {
            for (const char* k : {"root", "height", "max_queue_size", "back_level_edge_count",
                                  "max_back_level_edge_length", "same_level_edge_count", "unreachable_count"}) {
                c.unsigned_int(b, "$.bfs", k);
            }
            if (!b["vertices_per_level"].is_array()) c.fail("$.bfs.vertices_per_level", "expected array");
        }
    }
    if (const json& d = doc["dfs"]; !d.is_null()) {
        if (c.object(d, "$.dfs",
                     {"root", "max_stack_size", "tree_edges", "back_edges", "forward_edges", "cross_edges",
                      "visited"})) {
            for (const char* k :
                 {"root", "max_stack_size", "tree_edges", "back_edges", "forward_edges", "cross_edges", "visited"}) {
                c.unsigned_int(d, "$.dfs", k);
            }
        }
    }
    for (const char* k : {"diameter", "girth", "alternation_depth", "treewidth_lb", "treewidth_ub", "kellywidth_ub"}) {
        c.unsigned_int(doc, "$", k, true);
    }
    if (const json& d = doc["diamonds"]; !d.is_null()) {
        if (c.object(d, "$.diamonds", {"total", "even", "odd"})) {
            for (const char* k : {"total", "even", "odd"}) c.unsigned_int(d, "$.diamonds", k);
        }
    }
    if (const json& nb = doc["neighbourhoods"]; !nb.is_null()) {
        if (!nb.is_object()) {
            c.fail("$.neighbourhoods", "expected object");
        } else {
            for (const auto& [k, v] : nb.items()) {
                const std::string path = "$.neighbourhoods." + k;
                if (c.object(v, path,
                             {"min_size", "max_size", "avg_size", "min_clustering", "max_clustering",
                              "avg_clustering"})) {
                    c.unsigned_int(v, path, "min_size");
                    c.unsigned_int(v, path, "max_size");
                    for (const char* f : {"avg_size", "min_clustering", "max_clustering", "avg_clustering"}) {
                        c.number(v, path, f);
                    }
                }
            }
        }
    }
    if (const json& nd = doc["nesting_depth"]; !nd.is_null() && !nd.is_array()) {
        c.fail("$.nesting_depth", "expected array or null");
    }

    if (c.object(doc["measures"], "$.measures", {})) {
        for (Measure m : all_measures()) {
            const std::string name = to_string(m);
            const std::string path = "$.measures." + name;
            if (!doc["measures"].contains(name)) {
                c.fail("$.measures", "missing key '" + name + "'");
                continue;
            }
            const json& e = doc["measures"][name];
            if (!c.object(e, path, {"status", "time_ms"})) continue;
            c.number(e, path, "time_ms");
            const std::string status = e["status"].is_string() ? e["status"].get<std::string>() : "";
            static const std::set<std::string> valid{"not_requested", "ok", "timeout", "skipped", "error"};
            if (!valid.contains(status)) c.fail(path + ".status", "invalid status '" + status + "'");
            // a measure that did not finish must not carry a value
            if (status != "ok" && doc.contains(name) && !doc[name].is_null()) {
                c.fail("$." + name, "value present although status is " + status);
            }
        }
    }
    return errors;
}

}  // namespace pgsuite
