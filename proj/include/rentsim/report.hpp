#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rentsim/experiment.hpp"

namespace rentsim {

/// Everything needed to regenerate a report byte-for-byte. Every emitted
/// file embeds this block (as '#' comment lines in CSV, as an object in
/// JSON), including the fully resolved scenario.
struct RunManifest {
    std::string tool_version;
    std::string command;        // "simulate" | "sweep"
    std::string config_source;  // path as given, or "(builtin)"
    std::uint64_t seed = 0;
    int days = 0;
    std::vector<int> levels;  // sweep only
    std::string out_dir;
    std::string format;  // csv | json | both
    bool trace = false;
    int jobs = 1;
    Scenario scenario;
};

/// The '#'-prefixed header block, ending with the serialized resolved
/// config between marker lines.
std::vector<std::string> manifest_lines(const RunManifest& manifest);

nlohmann::json manifest_json(const RunManifest& manifest);

/// Extracts and parses the config block embedded by manifest_lines.
/// Throws ConfigError when the text has no complete block.
Scenario scenario_from_header(std::string_view report_text);

/// day,<tally columns>,<money columns>; day is 1-based as in the result
/// tables.
void write_daily_csv(std::ostream& out, const RunManifest& manifest,
                     const std::vector<DayRow>& days);

/// metric,n,total,mean,sd,variance,min,max — one row per metric.
void write_summary_csv(std::ostream& out, const RunManifest& manifest,
                       const ReplicationResult& result);

/// Profit matrix: one column per inventory level, one row per day, then
/// the Total / SD / Mean / Min / Max footer rows.
void write_profit_matrix_csv(std::ostream& out, const RunManifest& manifest,
                             const SweepResult& result);

nlohmann::json summary_json(const RunManifest& manifest, const ReplicationResult& result);
nlohmann::json sweep_summary_json(const RunManifest& manifest, const SweepResult& result);

nlohmann::json stat_block_json(const StatBlock& block);

}  // namespace rentsim
