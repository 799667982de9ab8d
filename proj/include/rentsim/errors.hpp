#pragma once

#include <stdexcept>
#include <string>

namespace rentsim {

/// Invalid configuration: bad file contents, out-of-range parameter,
/// violated distribution invariant. Message names the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated internal precondition (schedule into the past, release by a
/// non-holder, corrupted tally). Indicates a model bug; aborts the run.
class SimLogicError : public std::logic_error {
public:
    explicit SimLogicError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rentsim
