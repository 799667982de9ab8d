#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rentsim/accounting.hpp"
#include "rentsim/model.hpp"
#include "rentsim/stats.hpp"

namespace rentsim {

/// Full scenario: process model plus the money side.
struct Scenario {
    ModelConfig model;
    Tariff tariff;
    CostModel costs;

    bool operator==(const Scenario&) const = default;
};

void validate(const Scenario& scenario);

struct DayRow {
    DailyTally tally;
    MoneyReport money;

    bool operator==(const DayRow&) const = default;
};

/// Reported metric columns, in the stable output order: the tally fields
/// followed by the money fields.
inline constexpr std::array<const char*, 14> kMetricNames = {
    "arrivals",       "ordered_no_driver",  "ordered_with_driver", "cancelled_ineligible",
    "cancelled_no_car", "cancelled_no_driver", "in_system_at_close", "cars_used",
    "drivers_used",   "revenue",            "loss",                "overhead",
    "profit",         "gap",
};

inline constexpr std::size_t kMetricProfit = 12;

double metric_value(const DayRow& row, std::size_t metric);

struct ReplicationResult {
    std::vector<DayRow> days;
    std::array<StatBlock, kMetricNames.size()> stats;
};

/// Runs day indices 0..n_days-1, each from its own derived streams, and
/// aggregates a StatBlock per metric. `jobs` > 1 computes days in parallel;
/// the result is identical to the serial run.
ReplicationResult replicate(const Scenario& scenario, int n_days, int jobs = 1);

struct SweepResult {
    std::vector<int> levels;
    std::vector<ReplicationResult> per_level;
    int recommended_level = 0;

    const StatBlock& profit_stats(std::size_t level_index) const {
        return per_level[level_index].stats[kMetricProfit];
    }
};

/// Replicates each fleet-inventory level under common random numbers: the
/// streams for day d are identical across levels, so levels are compared
/// on the same demand days. The recommended level maximizes mean daily
/// profit; ties go to the smaller fleet.
SweepResult sweep(const Scenario& scenario, const std::vector<int>& levels, int n_days,
                  int jobs = 1);

struct Recommendation {
    int level = 0;
    double mean = 0.0;  // mean daily profit at the recommended level
    Money min = 0;      // worst day
    Money max = 0;      // best day
};

Recommendation recommend(const SweepResult& result);

}  // namespace rentsim
