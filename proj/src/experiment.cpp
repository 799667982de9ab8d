#include "rentsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "rentsim/errors.hpp"

namespace rentsim {

namespace {

void check_positive_money(Money value, const char* key) {
    if (value <= 0) {
        throw ConfigError(std::string(key) + " must be > 0, got " + std::to_string(value));
    }
}

void check_non_negative_money(Money value, const char* key) {
    if (value < 0) {
        throw ConfigError(std::string(key) + " must be >= 0, got " + std::to_string(value));
    }
}

/// Runs fn(i) for i in [0, n). Worker count caps at `jobs`; every index
/// writes only its own slot, so the schedule cannot affect results.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    const int thread_count = std::min(jobs, n);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

Money total_profit(const ReplicationResult& r) {
    Money total = 0;
    for (const DayRow& row : r.days) total += row.money.profit;
    return total;
}

}  // namespace

void validate(const Scenario& scenario) {
    validate(scenario.model);
    check_positive_money(scenario.tariff.daily_with_driver, "tariff.daily_with_driver");
    check_positive_money(scenario.tariff.daily_no_driver, "tariff.daily_no_driver");
    check_non_negative_money(scenario.costs.maintenance_per_car_day,
                             "costs.maintenance_per_car_day");
    check_non_negative_money(scenario.costs.idle_car_per_day, "costs.idle_car_per_day");
}

double metric_value(const DayRow& row, std::size_t metric) {
    switch (metric) {
        case 0: return row.tally.arrivals;
        case 1: return row.tally.ordered_no_driver;
        case 2: return row.tally.ordered_with_driver;
        case 3: return row.tally.cancelled_ineligible;
        case 4: return row.tally.cancelled_no_car;
        case 5: return row.tally.cancelled_no_driver;
        case 6: return row.tally.in_system_at_close;
        case 7: return row.tally.cars_used;
        case 8: return row.tally.drivers_used;
        case 9: return static_cast<double>(row.money.revenue);
        case 10: return static_cast<double>(row.money.loss);
        case 11: return static_cast<double>(row.money.overhead);
        case kMetricProfit: return static_cast<double>(row.money.profit);
        case 13: return row.money.gap;
        default: throw SimLogicError("metric index out of range");
    }
}

ReplicationResult replicate(const Scenario& scenario, int n_days, int jobs) {
    if (n_days < 1) throw ConfigError("n_days must be >= 1, got " + std::to_string(n_days));

    ReplicationResult result;
    result.days.resize(static_cast<std::size_t>(n_days));
    parallel_for(n_days, jobs, [&](int day) {
        const DayResult day_result = run_day(scenario.model, day);
        DayRow row;
        row.tally = day_result.tally;
        row.money =
            daily_profit(day_result.tally, scenario.model.fleet_size, scenario.tariff,
                         scenario.costs);
        result.days[static_cast<std::size_t>(day)] = row;
    });

    std::vector<double> column(result.days.size());
    for (std::size_t m = 0; m < kMetricNames.size(); ++m) {
        for (std::size_t d = 0; d < result.days.size(); ++d) {
            column[d] = metric_value(result.days[d], m);
        }
        result.stats[m] = stat_block(std::span<const double>(column));
    }
    return result;
}

SweepResult sweep(const Scenario& scenario, const std::vector<int>& levels, int n_days,
                  int jobs) {
    if (levels.empty()) throw ConfigError("sweep requires at least one inventory level");
    for (const int level : levels) {
        if (level < 0) {
            throw ConfigError("inventory level must be >= 0, got " + std::to_string(level));
        }
    }

    SweepResult result;
    result.levels = levels;
    result.per_level.reserve(levels.size());
    for (const int level : levels) {
        Scenario s = scenario;
        s.model.fleet_size = level;  // master_seed untouched: common random numbers
        result.per_level.push_back(replicate(s, n_days, jobs));
    }

    // Argmax by exact integer totals; mean ordering is the same since every
    // level runs the same number of days.
    std::size_t best = 0;
    Money best_total = total_profit(result.per_level[0]);
    for (std::size_t i = 1; i < result.per_level.size(); ++i) {
        const Money t = total_profit(result.per_level[i]);
        if (t > best_total || (t == best_total && levels[i] < levels[best])) {
            best = i;
            best_total = t;
        }
    }
    result.recommended_level = levels[best];
    return result;
}

Recommendation recommend(const SweepResult& result) {
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
        if (result.levels[i] != result.recommended_level) continue;
        const StatBlock& profit = result.profit_stats(i);
        Recommendation rec;
        rec.level = result.recommended_level;
        rec.mean = profit.mean;
        rec.min = static_cast<Money>(profit.min);
        rec.max = static_cast<Money>(profit.max);
        return rec;
    }
    throw SimLogicError("recommended level missing from sweep result");
}

}  // namespace rentsim
