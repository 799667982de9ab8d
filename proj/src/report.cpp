#include "rentsim/report.hpp"

#include <ostream>
#include <sstream>

#include "rentsim/config.hpp"
#include "rentsim/errors.hpp"

namespace rentsim {

namespace {

constexpr const char* kConfigBegin = "--- config ---";
constexpr const char* kConfigEnd = "--- end config ---";

std::string join_levels(const std::vector<int>& levels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out << ",";
        out << levels[i];
    }
    return out.str();
}

void write_manifest(std::ostream& out, const RunManifest& m) {
    for (const std::string& line : manifest_lines(m)) out << line << "\n";
}

}  // namespace

std::vector<std::string> manifest_lines(const RunManifest& m) {
    std::vector<std::string> lines;
    lines.push_back("# rentsim " + m.tool_version);
    lines.push_back("# command: " + m.command);
    lines.push_back("# config: " + m.config_source);
    lines.push_back("# seed: " + std::to_string(m.seed));
    lines.push_back("# days: " + std::to_string(m.days));
    if (m.command == "sweep") lines.push_back("# levels: " + join_levels(m.levels));
    lines.push_back("# out: " + m.out_dir);
    lines.push_back("# format: " + m.format);
    lines.push_back(std::string("# trace: ") + (m.trace ? "on" : "off"));
    lines.push_back("# jobs: " + std::to_string(m.jobs));
    lines.push_back(std::string("# ") + kConfigBegin);
    std::istringstream cfg(serialize_config(m.scenario));
    std::string line;
    while (std::getline(cfg, line)) lines.push_back("# " + line);
    lines.push_back(std::string("# ") + kConfigEnd);
    return lines;
}

nlohmann::json manifest_json(const RunManifest& m) {
    const auto& model = m.scenario.model;
    nlohmann::json dists;
    const std::pair<const char*, const DistributionSpec*> named[] = {
        {"arrival", &model.dists.arrival},
        {"verification", &model.dists.verification},
        {"survey", &model.dists.survey},
        {"driver_contract", &model.dists.driver_contract},
        {"car_recheck", &model.dists.car_recheck},
        {"engine_recheck", &model.dists.engine_recheck},
        {"equipment_recheck", &model.dists.equipment_recheck},
        {"insurance_recheck", &model.dists.insurance_recheck},
        {"schedule_check", &model.dists.schedule_check},
        {"reschedule", &model.dists.reschedule},
    };
    for (const auto& [name, dist] : named) {
        dists[name] = {{"family", family_name(dist->family)}, {"p1", dist->p1}, {"p2", dist->p2}};
    }

    nlohmann::json j{
        {"tool", "rentsim"},
        {"version", m.tool_version},
        {"command", m.command},
        {"config", m.config_source},
        {"seed", m.seed},
        {"days", m.days},
        {"out", m.out_dir},
        {"format", m.format},
        {"trace", m.trace},
        {"jobs", m.jobs},
        {"scenario",
         {{"model",
           {{"p_eligible", model.p_eligible},
            {"p_wants_driver", model.p_wants_driver},
            {"p_accept_driver_offer", model.p_accept_driver_offer},
            {"p_accept_reschedule", model.p_accept_reschedule},
            {"fleet_size", model.fleet_size},
            {"driver_count", model.driver_count},
            {"day_length", model.day_length},
            {"master_seed", model.master_seed}}},
          {"servers",
           {{"customer_service", model.servers.customer_service},
            {"maintenance", model.servers.maintenance},
            {"planning", model.servers.planning},
            {"driver_scheduling", model.servers.driver_scheduling}}},
          {"dists", dists},
          {"tariff",
           {{"daily_with_driver", m.scenario.tariff.daily_with_driver},
            {"daily_no_driver", m.scenario.tariff.daily_no_driver}}},
          {"costs",
           {{"maintenance_per_car_day", m.scenario.costs.maintenance_per_car_day},
            {"idle_car_per_day", m.scenario.costs.idle_car_per_day}}}}},
    };
    if (m.command == "sweep") j["levels"] = m.levels;
    return j;
}

Scenario scenario_from_header(std::string_view report_text) {
    std::istringstream in{std::string(report_text)};
    std::string line;
    std::ostringstream cfg;
    bool in_block = false;
    bool complete = false;
    while (std::getline(in, line)) {
        if (!line.starts_with("#")) break;  // header ends at the first data line
        std::string body = line.size() > 1 && line[1] == ' ' ? line.substr(2) : line.substr(1);
        if (body == kConfigBegin) {
            in_block = true;
            continue;
        }
        if (body == kConfigEnd) {
            complete = in_block;
            break;
        }
        if (in_block) cfg << body << "\n";
    }
    if (!complete) throw ConfigError("report header has no embedded config block");
    return parse_config(cfg.str(), "(embedded header)");
}

void write_daily_csv(std::ostream& out, const RunManifest& manifest,
                     const std::vector<DayRow>& days) {
    write_manifest(out, manifest);
    out << "day";
    for (const char* name : kMetricNames) out << "," << name;
    out << "\n";
    for (std::size_t d = 0; d < days.size(); ++d) {
        out << (d + 1);
        const DayRow& row = days[d];
        const DailyTally& t = row.tally;
        const MoneyReport& money = row.money;
        out << "," << t.arrivals << "," << t.ordered_no_driver << "," << t.ordered_with_driver
            << "," << t.cancelled_ineligible << "," << t.cancelled_no_car << ","
            << t.cancelled_no_driver << "," << t.in_system_at_close << "," << t.cars_used << ","
            << t.drivers_used;
        out << "," << money.revenue << "," << money.loss << "," << money.overhead << ","
            << money.profit << "," << money.gap;
        out << "\n";
    }
}

void write_summary_csv(std::ostream& out, const RunManifest& manifest,
                       const ReplicationResult& result) {
    write_manifest(out, manifest);
    out << "metric,n,total,mean,sd,variance,min,max\n";
    for (std::size_t m = 0; m < kMetricNames.size(); ++m) {
        const StatBlock& b = result.stats[m];
        out << kMetricNames[m] << "," << b.n << "," << format_double(b.total) << ","
            << format_double(b.mean) << "," << format_double(b.sd) << ","
            << format_double(b.variance) << "," << format_double(b.min) << ","
            << format_double(b.max) << "\n";
    }
}

void write_profit_matrix_csv(std::ostream& out, const RunManifest& manifest,
                             const SweepResult& result) {
    write_manifest(out, manifest);
    out << "day";
    for (const int level : result.levels) out << "," << level;
    out << "\n";
    const std::size_t n_days = result.per_level.empty() ? 0 : result.per_level[0].days.size();
    for (std::size_t d = 0; d < n_days; ++d) {
        out << (d + 1);
        for (const ReplicationResult& level : result.per_level) {
            out << "," << level.days[d].money.profit;
        }
        out << "\n";
    }
    const auto footer = [&](const char* label, auto pick) {
        out << label;
        for (std::size_t i = 0; i < result.per_level.size(); ++i) {
            out << "," << format_double(pick(result.profit_stats(i)));
        }
        out << "\n";
    };
    footer("Total", [](const StatBlock& b) { return b.total; });
    footer("SD", [](const StatBlock& b) { return b.sd; });
    footer("Mean", [](const StatBlock& b) { return b.mean; });
    footer("Min", [](const StatBlock& b) { return b.min; });
    footer("Max", [](const StatBlock& b) { return b.max; });
}

nlohmann::json stat_block_json(const StatBlock& b) {
    return {{"n", b.n},   {"total", b.total},       {"mean", b.mean}, {"sd", b.sd},
            {"variance", b.variance}, {"min", b.min}, {"max", b.max}};
}

namespace {

nlohmann::json stats_json(const ReplicationResult& result) {
    nlohmann::json stats;
    for (std::size_t m = 0; m < kMetricNames.size(); ++m) {
        stats[kMetricNames[m]] = stat_block_json(result.stats[m]);
    }
    return stats;
}

}  // namespace

nlohmann::json summary_json(const RunManifest& manifest, const ReplicationResult& result) {
    return {{"manifest", manifest_json(manifest)}, {"stats", stats_json(result)}};
}

nlohmann::json sweep_summary_json(const RunManifest& manifest, const SweepResult& result) {
    const Recommendation rec = recommend(result);
    nlohmann::json per_level;
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
        per_level[std::to_string(result.levels[i])] = stats_json(result.per_level[i]);
    }
    return {{"manifest", manifest_json(manifest)},
            {"levels", result.levels},
            {"per_level", per_level},
            {"recommendation",
             {{"level", rec.level}, {"mean", rec.mean}, {"min", rec.min}, {"max", rec.max}}}};
}

}  // namespace rentsim
