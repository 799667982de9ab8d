#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rentsim/config.hpp"
#include "rentsim/errors.hpp"
#include "rentsim/report.hpp"
#include "rentsim/version.hpp"

namespace fs = std::filesystem;

namespace {

using namespace rentsim;

/// Output-side failure (unwritable directory, file open error): exit 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::uint64_t seed = 0;
    int days = 30;
    std::vector<int> levels{30, 40, 50, 53};
    std::string out_dir = "out";
    std::string format = "both";
    bool trace = false;
    int jobs = 1;
};

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "Config file (defaults apply when omitted)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", opt.seed, "Master seed (overrides the config file)");
    cmd->add_option("--days", opt.days, "Number of replicated days")
        ->check(CLI::Range(1, 1000000000))
        ->capture_default_str();
    cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--format", opt.format, "Report formats to emit")
        ->check(CLI::IsMember({"csv", "json", "both"}))
        ->capture_default_str();
    cmd->add_flag("--trace", opt.trace, "Also emit the fired-event trace CSV");
    cmd->add_option("--jobs", opt.jobs, "Worker threads for days (output is identical)")
        ->check(CLI::Range(1, 1000000000))
        ->capture_default_str();
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
}

class TraceWriter : public RunObserver {
public:
    explicit TraceWriter(std::ostream& out) : out_(out) {}

    void on_event(const des::Event& ev) override {
        out_ << format_double(ev.time) << "," << ev.seq << "," << event_kind_name(ev.kind) << ","
             << ev.entity_id << "\n";
    }

private:
    std::ostream& out_;
};

/// Re-runs days serially with an observer attached; determinism makes this
/// replay identical to the replicate() pass that produced the tables.
void write_trace(std::ostream& out, const RunManifest& manifest) {
    for (const std::string& line : manifest_lines(manifest)) out << line << "\n";
    out << "time,seq,kind,entity_id\n";
    const bool is_sweep = manifest.command == "sweep";
    const std::vector<int> levels = is_sweep ? manifest.levels : std::vector<int>{-1};
    for (const int level : levels) {
        ModelConfig cfg = manifest.scenario.model;
        if (level >= 0) cfg.fleet_size = level;
        for (int day = 0; day < manifest.days; ++day) {
            if (level >= 0) out << "# level " << level << " day " << (day + 1) << "\n";
            else out << "# day " << (day + 1) << "\n";
            TraceWriter writer(out);
            run_day(cfg, day, &writer);
        }
    }
}

RunManifest make_manifest(const std::string& command, const Options& opt,
                          const Scenario& scenario) {
    RunManifest m;
    m.tool_version = kVersion;
    m.command = command;
    m.config_source = opt.config_path.empty() ? "(builtin)" : opt.config_path;
    m.seed = scenario.model.master_seed;
    m.days = opt.days;
    if (command == "sweep") m.levels = opt.levels;
    m.out_dir = opt.out_dir;
    m.format = opt.format;
    m.trace = opt.trace;
    m.jobs = opt.jobs;
    m.scenario = scenario;
    return m;
}

fs::path prepare_out_dir(const Options& opt) {
    const fs::path dir(opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory '" + opt.out_dir + "'");
    }
    return dir;
}

int run_simulate(const Options& opt, const Scenario& scenario) {
    const RunManifest manifest = make_manifest("simulate", opt, scenario);
    const ReplicationResult result = replicate(scenario, opt.days, opt.jobs);

    const fs::path dir = prepare_out_dir(opt);
    const bool csv = opt.format == "csv" || opt.format == "both";
    const bool json = opt.format == "json" || opt.format == "both";
    if (csv) {
        auto daily = open_out(dir / "daily.csv");
        write_daily_csv(daily, manifest, result.days);
        auto summary = open_out(dir / "summary.csv");
        write_summary_csv(summary, manifest, result);
    }
    if (json) {
        auto out = open_out(dir / "summary.json");
        out << summary_json(manifest, result).dump(2) << "\n";
    }
    if (opt.trace) {
        auto out = open_out(dir / "trace.csv");
        write_trace(out, manifest);
    }

    std::cout << "simulate: " << opt.days << " days, seed " << manifest.seed << ", mean profit "
              << format_double(result.stats[kMetricProfit].mean) << " US$/day -> " << dir.string()
              << "\n";
    return 0;
}

int run_sweep(const Options& opt, const Scenario& scenario) {
    const RunManifest manifest = make_manifest("sweep", opt, scenario);
    const SweepResult result = sweep(scenario, opt.levels, opt.days, opt.jobs);

    const fs::path dir = prepare_out_dir(opt);
    const bool csv = opt.format == "csv" || opt.format == "both";
    const bool json = opt.format == "json" || opt.format == "both";
    if (csv) {
        auto matrix = open_out(dir / "profit_matrix.csv");
        write_profit_matrix_csv(matrix, manifest, result);
        for (std::size_t i = 0; i < result.levels.size(); ++i) {
            const std::string level = std::to_string(result.levels[i]);
            auto daily = open_out(dir / ("daily_level_" + level + ".csv"));
            write_daily_csv(daily, manifest, result.per_level[i].days);
            auto summary = open_out(dir / ("summary_level_" + level + ".csv"));
            write_summary_csv(summary, manifest, result.per_level[i]);
        }
    }
    if (json) {
        auto out = open_out(dir / "summary.json");
        out << sweep_summary_json(manifest, result).dump(2) << "\n";
    }
    if (opt.trace) {
        auto out = open_out(dir / "trace.csv");
        write_trace(out, manifest);
    }

    const Recommendation rec = recommend(result);
    std::cout << "sweep: recommended inventory " << rec.level << " (mean daily profit "
              << format_double(rec.mean) << " US$, worst day " << rec.min << ", best day "
              << rec.max << ") -> " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rentsim — deterministic car-rental service-system simulator"};
    app.set_version_flag("--version", std::string("rentsim ") + kVersion);
    app.require_subcommand(1);

    Options sim_opt;
    CLI::App* sim = app.add_subcommand("simulate", "Replicate days at one inventory level");
    add_common_options(sim, sim_opt);

    Options sweep_opt;
    CLI::App* swp = app.add_subcommand("sweep", "Compare inventory levels and recommend one");
    add_common_options(swp, sweep_opt);
    swp->add_option("--levels", sweep_opt.levels, "Fleet sizes to compare")
        ->delimiter(',')
        ->expected(1, -1)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Options& opt = sim->parsed() ? sim_opt : sweep_opt;
        Scenario scenario =
            opt.config_path.empty() ? default_scenario() : load_config(opt.config_path);
        if ((sim->parsed() ? *sim : *swp).count("--seed") > 0) {
            scenario.model.master_seed = opt.seed;
        }
        validate(scenario);
        if (sim->parsed()) return run_simulate(opt, scenario);
        if (sweep_opt.levels.empty()) throw ConfigError("sweep requires a non-empty --levels");
        return run_sweep(sweep_opt, scenario);
    } catch (const ConfigError& e) {
        std::cerr << "rentsim: config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "rentsim: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rentsim: " << e.what() << "\n";
        return 2;
    }
}
