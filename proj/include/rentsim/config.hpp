#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rentsim/experiment.hpp"

namespace rentsim {

/// The built-in scenario: the measured process data, tariffs and overhead
/// costs, a 40-car fleet, 8 drivers, one server per department and a
/// 720-minute day.
Scenario default_scenario();

/// Parses the sectioned key-value config format. Missing keys keep their
/// defaults; unknown sections or keys are hard errors. Every error message
/// carries the key name and source location. The parsed scenario is fully
/// validated before it is returned.
Scenario parse_config(std::string_view text, const std::string& source_name);

/// parse_config over a file's contents. Throws ConfigError when the file
/// cannot be read.
Scenario load_config(const std::filesystem::path& path);

/// Inverse of parse_config: emits every section and key in a fixed order.
/// Doubles use shortest round-trip formatting, so
/// parse(serialize(s)) == s exactly.
std::string serialize_config(const Scenario& scenario);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace rentsim
