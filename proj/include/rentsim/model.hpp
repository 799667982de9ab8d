#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rentsim/des.hpp"
#include "rentsim/distributions.hpp"
#include "rentsim/prng.hpp"

namespace rentsim {

/// Terminal classification of a customer, assigned exactly once.
enum class Outcome {
    OrderedNoDriver,
    OrderedWithDriver,
    CancelledIneligible,
    CancelledNoCar,
    CancelledNoDriver,
    InSystemAtClose,
};

const char* outcome_name(Outcome outcome);

/// The four departments a customer passes through, in pipeline order.
enum class Step { CustomerService = 0, Maintenance = 1, Planning = 2, DriverScheduling = 3 };

inline constexpr int kStepCount = 4;

struct StepSpan {
    double start = -1.0;  // service start (server granted)
    double end = -1.0;    // server released
    bool started() const { return start >= 0.0; }
    bool finished() const { return end >= 0.0; }
    bool operator==(const StepSpan&) const = default;
};

struct Customer {
    int id = -1;
    double arrival_min = 0.0;
    bool wants_driver = false;            // true = driver-package path
    bool eligible = false;
    bool accepted_driver_offer = false;   // consulted only when ineligible
    bool accepted_reschedule = false;     // consulted only when offered
    std::array<StepSpan, kStepCount> steps{};
    std::optional<Outcome> outcome;

    const StepSpan& step(Step s) const { return steps[static_cast<int>(s)]; }
    bool operator==(const Customer&) const = default;
};

/// The ten service-time distributions, defaults straight from the measured
/// process data.
struct ServiceDistributions {
    DistributionSpec arrival{DistFamily::Exponential, 15.0, 0.0};
    DistributionSpec verification{DistFamily::TruncatedNormal, 10.0, 2.0};
    DistributionSpec survey{DistFamily::TruncatedNormal, 30.0, 15.0};
    DistributionSpec driver_contract{DistFamily::TruncatedNormal, 5.0, 0.01};
    DistributionSpec car_recheck{DistFamily::TruncatedNormal, 10.0, 0.2};
    DistributionSpec engine_recheck{DistFamily::TruncatedNormal, 30.0, 0.1};
    DistributionSpec equipment_recheck{DistFamily::Uniform, 5.0, 10.0};
    DistributionSpec insurance_recheck{DistFamily::Constant, 5.0, 0.0};
    DistributionSpec schedule_check{DistFamily::Constant, 10.0, 0.0};
    DistributionSpec reschedule{DistFamily::TruncatedNormal, 15.0, 0.2};

    bool operator==(const ServiceDistributions&) const = default;
};

/// Staff per department. Capacity is the knob the "recruit new staff"
/// alternative turns.
struct ServerCounts {
    int customer_service = 1;
    int maintenance = 1;
    int planning = 1;
    int driver_scheduling = 1;

    bool operator==(const ServerCounts&) const = default;
};

struct ModelConfig {
    ServiceDistributions dists;
    double p_eligible = 0.90;
    double p_wants_driver = 0.18;
    double p_accept_driver_offer = 0.30;
    double p_accept_reschedule = 0.50;
    int fleet_size = 40;
    int driver_count = 8;
    ServerCounts servers;
    double day_length = 720.0;  // 12-hour working day, minutes
    std::uint64_t master_seed = 1;

    bool operator==(const ModelConfig&) const = default;
};

/// Throws ConfigError naming the offending field.
void validate(const ModelConfig& cfg);

struct DailyTally {
    int arrivals = 0;
    int ordered_no_driver = 0;
    int ordered_with_driver = 0;
    int cancelled_ineligible = 0;
    int cancelled_no_car = 0;
    int cancelled_no_driver = 0;
    int in_system_at_close = 0;
    int cars_used = 0;     // = ordered_no_driver + ordered_with_driver
    int drivers_used = 0;  // = ordered_with_driver

    bool operator==(const DailyTally&) const = default;
};

/// How an entity's relation to a pool changed. GrantedFromQueue marks a
/// hand-off at release time; FIFO audits compare Enqueued order against
/// GrantedFromQueue order.
enum class PoolAction { Granted, Enqueued, GrantedFromQueue, Released };

const char* pool_action_name(PoolAction action);

/// Test and trace hook. A run invokes on_event for every fired calendar
/// event and on_pool for every pool transition, in simulation order.
class RunObserver {
public:
    virtual ~RunObserver() = default;
    virtual void on_event(const des::Event& /*event*/) {}
    virtual void on_pool(double /*time*/, const std::string& /*pool*/, PoolAction /*action*/,
                         int /*entity_id*/, int /*in_use*/, int /*capacity*/) {}
};

/// Stable names for trace output.
const char* event_kind_name(int kind);

/// Per-day stream derivation. The id never encodes the fleet size, so an
/// inventory sweep replays identical demand days across levels (common
/// random numbers).
enum class StreamPurpose : std::uint64_t { Arrivals = 0, ServiceTimes = 1, Bernoullis = 2 };

std::uint64_t stream_id_for(int day_index, StreamPurpose purpose);

/// Strictly increasing arrival times in [0, day_length); generation stops
/// at the first time >= day_length.
std::vector<double> generate_arrivals(const ModelConfig& cfg, RandomStream& stream);

struct DayResult {
    DailyTally tally;
    std::vector<Customer> customers;
};

/// Simulates one day from a fresh calendar and full pools. Arrivals stop at
/// day_length; events past day_length never fire and the customers they
/// belong to close as InSystemAtClose. Deterministic in
/// (cfg.master_seed, day_index).
DayResult run_day(const ModelConfig& cfg, int day_index, RunObserver* observer = nullptr);

}  // namespace rentsim
