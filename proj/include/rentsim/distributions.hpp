#pragma once

#include <string>

#include "rentsim/prng.hpp"

namespace rentsim {

/// Durations are floored at this value (minutes). A service time must be
/// positive; normal durations are resampled above the floor, everything
/// else is clamped.
inline constexpr double kMinDuration = 0.01;

enum class DistFamily { Exponential, TruncatedNormal, Uniform, Constant };

/// One sampler family with its parameters, all in minutes.
///   Exponential:     p1 = mean            (p1 > 0)
///   TruncatedNormal: p1 = mean, p2 = sd   (p2 >= 0)
///   Uniform:         p1 = min,  p2 = max  (p1 <= p2)
///   Constant:        p1 = value           (p1 >= 0)
struct DistributionSpec {
    DistFamily family = DistFamily::Constant;
    double p1 = 0.0;
    double p2 = 0.0;

    bool operator==(const DistributionSpec&) const = default;
};

/// Throws ConfigError naming the offending field; `context` identifies the
/// spec in the message (e.g. "dist.survey").
void validate(const DistributionSpec& spec, const std::string& context);

/// Draws one duration >= kMinDuration and advances the stream. Constant
/// returns p1 exactly (when p1 is above the floor); Uniform stays in
/// [p1, p2]. Throws ConfigError on an invalid spec.
double sample(const DistributionSpec& spec, RandomStream& stream);

/// Config-file family names: "exponential", "normal", "uniform", "constant".
std::string family_name(DistFamily family);
DistFamily family_from_name(const std::string& name, const std::string& context);

}  // namespace rentsim
