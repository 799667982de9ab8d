#include "rentsim/distributions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rentsim/errors.hpp"

namespace rentsim {

namespace {

[[noreturn]] void bad_spec(const std::string& context, const std::string& detail) {
    throw ConfigError(context + ": " + detail);
}

// One standard normal deviate by Box-Muller. Fixed draw count (two
// uniforms per deviate), so stream consumption never depends on the
// values drawn.
double standard_normal(RandomStream& stream) {
    const double u1 = 1.0 - stream.next_double();  // (0, 1]
    const double u2 = stream.next_double();        // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

void validate(const DistributionSpec& spec, const std::string& context) {
    std::ostringstream msg;
    switch (spec.family) {
        case DistFamily::Exponential:
            if (!(spec.p1 > 0.0)) {
                msg << "p1 (mean) must be > 0 for family exponential, got " << spec.p1;
                bad_spec(context, msg.str());
            }
            break;
        case DistFamily::TruncatedNormal:
            if (!(spec.p2 >= 0.0)) {
                msg << "p2 (sd) must be >= 0 for family normal, got " << spec.p2;
                bad_spec(context, msg.str());
            }
            break;
        case DistFamily::Uniform:
            if (!(spec.p1 <= spec.p2)) {
                msg << "p1 (min) must be <= p2 (max) for family uniform, got p1=" << spec.p1
                    << " p2=" << spec.p2;
                bad_spec(context, msg.str());
            }
            break;
        case DistFamily::Constant:
            if (!(spec.p1 >= 0.0)) {
                msg << "p1 (value) must be >= 0 for family constant, got " << spec.p1;
                bad_spec(context, msg.str());
            }
            break;
    }
}

double sample(const DistributionSpec& spec, RandomStream& stream) {
    validate(spec, "sample");
    switch (spec.family) {
        case DistFamily::Exponential: {
            // Inverse CDF; u < 1 strictly, so the result is finite.
            const double u = stream.next_double();
            const double x = -spec.p1 * std::log1p(-u);
            return x < kMinDuration ? kMinDuration : x;
        }
        case DistFamily::TruncatedNormal: {
            // Resampling preserves the conditional shape above the floor;
            // the clamp only fires after 100 misses (never in practice for
            // the configured parameter ranges).
            for (int i = 0; i < 100; ++i) {
                const double x = spec.p1 + spec.p2 * standard_normal(stream);
                if (x >= kMinDuration) return x;
            }
            return kMinDuration;
        }
        case DistFamily::Uniform: {
            const double x = spec.p1 + (spec.p2 - spec.p1) * stream.next_double();
            return x < kMinDuration ? kMinDuration : x;
        }
        case DistFamily::Constant:
            stream.next_double();  // every sample advances the stream
            return spec.p1 < kMinDuration ? kMinDuration : spec.p1;
    }
    bad_spec("sample", "unknown family");
}

std::string family_name(DistFamily family) {
    switch (family) {
        case DistFamily::Exponential: return "exponential";
        case DistFamily::TruncatedNormal: return "normal";
        case DistFamily::Uniform: return "uniform";
        case DistFamily::Constant: return "constant";
    }
    return "unknown";
}

DistFamily family_from_name(const std::string& name, const std::string& context) {
    if (name == "exponential") return DistFamily::Exponential;
    if (name == "normal") return DistFamily::TruncatedNormal;
    if (name == "uniform") return DistFamily::Uniform;
    if (name == "constant") return DistFamily::Constant;
    bad_spec(context, "unknown family '" + name +
                          "' (expected exponential, normal, uniform or constant)");
}

}  // namespace rentsim
