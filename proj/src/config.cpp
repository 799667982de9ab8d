#include "rentsim/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rentsim/errors.hpp"

namespace rentsim {

namespace {

struct KeyRef {
    std::string section;
    std::string key;
    std::string location;  // "source:line"

    std::string describe() const { return "[" + section + "] " + key + " at " + location; }
};

[[noreturn]] void fail(const KeyRef& ref, const std::string& detail) {
    throw ConfigError(ref.describe() + ": " + detail);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(const KeyRef& ref, std::string_view value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail(ref, "expected a number, got '" + std::string(value) + "'");
    }
    return out;
}

long long parse_int(const KeyRef& ref, std::string_view value) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail(ref, "expected an integer, got '" + std::string(value) + "'");
    }
    return out;
}

std::uint64_t parse_u64(const KeyRef& ref, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        fail(ref, "expected an unsigned integer, got '" + std::string(value) + "'");
    }
    return out;
}

double parse_probability(const KeyRef& ref, std::string_view value) {
    const double p = parse_double(ref, value);
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ref, "probability must be in [0, 1], got " + std::string(value));
    }
    return p;
}

int parse_count(const KeyRef& ref, std::string_view value) {
    const long long v = parse_int(ref, value);
    if (v < 0 || v > 1'000'000'000) fail(ref, "count out of range: " + std::string(value));
    return static_cast<int>(v);
}

Money parse_money(const KeyRef& ref, std::string_view value) {
    return parse_int(ref, value);  // whole US$ only
}

DistributionSpec* dist_by_name(Scenario& s, const std::string& name) {
    auto& d = s.model.dists;
    if (name == "arrival") return &d.arrival;
    if (name == "verification") return &d.verification;
    if (name == "survey") return &d.survey;
    if (name == "driver_contract") return &d.driver_contract;
    if (name == "car_recheck") return &d.car_recheck;
    if (name == "engine_recheck") return &d.engine_recheck;
    if (name == "equipment_recheck") return &d.equipment_recheck;
    if (name == "insurance_recheck") return &d.insurance_recheck;
    if (name == "schedule_check") return &d.schedule_check;
    if (name == "reschedule") return &d.reschedule;
    return nullptr;
}

void apply_model_key(Scenario& s, const KeyRef& ref, std::string_view value) {
    auto& m = s.model;
    if (ref.key == "p_eligible") {
        m.p_eligible = parse_probability(ref, value);
    } else if (ref.key == "p_wants_driver") {
        m.p_wants_driver = parse_probability(ref, value);
    } else if (ref.key == "p_accept_driver_offer") {
        m.p_accept_driver_offer = parse_probability(ref, value);
    } else if (ref.key == "p_accept_reschedule") {
        m.p_accept_reschedule = parse_probability(ref, value);
    } else if (ref.key == "fleet_size") {
        m.fleet_size = parse_count(ref, value);
    } else if (ref.key == "driver_count") {
        m.driver_count = parse_count(ref, value);
    } else if (ref.key == "day_length") {
        m.day_length = parse_double(ref, value);
        if (!(m.day_length > 0.0)) fail(ref, "day_length must be > 0");
    } else if (ref.key == "master_seed") {
        m.master_seed = parse_u64(ref, value);
    } else {
        fail(ref, "unknown key");
    }
}

void apply_servers_key(Scenario& s, const KeyRef& ref, std::string_view value) {
    auto& sv = s.model.servers;
    if (ref.key == "customer_service") {
        sv.customer_service = parse_count(ref, value);
    } else if (ref.key == "maintenance") {
        sv.maintenance = parse_count(ref, value);
    } else if (ref.key == "planning") {
        sv.planning = parse_count(ref, value);
    } else if (ref.key == "driver_scheduling") {
        sv.driver_scheduling = parse_count(ref, value);
    } else {
        fail(ref, "unknown key");
    }
}

void apply_tariff_key(Scenario& s, const KeyRef& ref, std::string_view value) {
    if (ref.key == "daily_with_driver") {
        s.tariff.daily_with_driver = parse_money(ref, value);
    } else if (ref.key == "daily_no_driver") {
        s.tariff.daily_no_driver = parse_money(ref, value);
    } else {
        fail(ref, "unknown key");
    }
}

void apply_costs_key(Scenario& s, const KeyRef& ref, std::string_view value) {
    if (ref.key == "maintenance_per_car_day") {
        s.costs.maintenance_per_car_day = parse_money(ref, value);
    } else if (ref.key == "idle_car_per_day") {
        s.costs.idle_car_per_day = parse_money(ref, value);
    } else {
        fail(ref, "unknown key");
    }
}

void apply_dist_key(DistributionSpec& dist, const KeyRef& ref, std::string_view value) {
    if (ref.key == "family") {
        dist.family = family_from_name(std::string(value), ref.describe());
    } else if (ref.key == "p1") {
        dist.p1 = parse_double(ref, value);
    } else if (ref.key == "p2") {
        dist.p2 = parse_double(ref, value);
    } else {
        fail(ref, "unknown key");
    }
}

}  // namespace

Scenario default_scenario() { return Scenario{}; }

Scenario parse_config(std::string_view text, const std::string& source_name) {
    Scenario scenario = default_scenario();

    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;

        const std::string location = source_name + ":" + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError(location + ": malformed section header '" + std::string(line) +
                                  "'");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            const bool known = section == "model" || section == "servers" ||
                               section == "tariff" || section == "costs" ||
                               (section.starts_with("dist.") &&
                                dist_by_name(scenario, section.substr(5)) != nullptr);
            if (!known) {
                throw ConfigError(location + ": unknown section [" + section + "]");
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(location + ": expected 'key = value', got '" + std::string(line) +
                              "'");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(location + ": empty key");
        if (section.empty()) {
            throw ConfigError(location + ": key '" + key + "' outside any section");
        }

        const KeyRef ref{section, key, location};
        if (section == "model") {
            apply_model_key(scenario, ref, value);
        } else if (section == "servers") {
            apply_servers_key(scenario, ref, value);
        } else if (section == "tariff") {
            apply_tariff_key(scenario, ref, value);
        } else if (section == "costs") {
            apply_costs_key(scenario, ref, value);
        } else {
            apply_dist_key(*dist_by_name(scenario, section.substr(5)), ref, value);
        }
    }

    try {
        validate(scenario);
    } catch (const ConfigError& e) {
        throw ConfigError(source_name + ": " + e.what());
    }
    return scenario;
}

Scenario load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.filename().string());
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string serialize_config(const Scenario& s) {
    std::ostringstream out;
    const auto& m = s.model;
    out << "[model]\n";
    out << "p_eligible = " << format_double(m.p_eligible) << "\n";
    out << "p_wants_driver = " << format_double(m.p_wants_driver) << "\n";
    out << "p_accept_driver_offer = " << format_double(m.p_accept_driver_offer) << "\n";
    out << "p_accept_reschedule = " << format_double(m.p_accept_reschedule) << "\n";
    out << "fleet_size = " << m.fleet_size << "\n";
    out << "driver_count = " << m.driver_count << "\n";
    out << "day_length = " << format_double(m.day_length) << "\n";
    out << "master_seed = " << m.master_seed << "\n";
    out << "\n[servers]\n";
    out << "customer_service = " << m.servers.customer_service << "\n";
    out << "maintenance = " << m.servers.maintenance << "\n";
    out << "planning = " << m.servers.planning << "\n";
    out << "driver_scheduling = " << m.servers.driver_scheduling << "\n";
    out << "\n[tariff]\n";
    out << "daily_with_driver = " << s.tariff.daily_with_driver << "\n";
    out << "daily_no_driver = " << s.tariff.daily_no_driver << "\n";
    out << "\n[costs]\n";
    out << "maintenance_per_car_day = " << s.costs.maintenance_per_car_day << "\n";
    out << "idle_car_per_day = " << s.costs.idle_car_per_day << "\n";

    const std::pair<const char*, const DistributionSpec*> dists[] = {
        {"arrival", &m.dists.arrival},
        {"verification", &m.dists.verification},
        {"survey", &m.dists.survey},
        {"driver_contract", &m.dists.driver_contract},
        {"car_recheck", &m.dists.car_recheck},
        {"engine_recheck", &m.dists.engine_recheck},
        {"equipment_recheck", &m.dists.equipment_recheck},
        {"insurance_recheck", &m.dists.insurance_recheck},
        {"schedule_check", &m.dists.schedule_check},
        {"reschedule", &m.dists.reschedule},
    };
    for (const auto& [name, dist] : dists) {
        out << "\n[dist." << name << "]\n";
        out << "family = " << family_name(dist->family) << "\n";
        out << "p1 = " << format_double(dist->p1) << "\n";
        out << "p2 = " << format_double(dist->p2) << "\n";
    }
    return out.str();
}

}  // namespace rentsim
