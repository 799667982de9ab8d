#pragma once

#include <cstdint>

#include "rentsim/model.hpp"

namespace rentsim {

/// Whole US$; all figures in the tariff and cost tables are integers and
/// money arithmetic stays exact.
using Money = std::int64_t;

struct Tariff {
    Money daily_with_driver = 55;
    Money daily_no_driver = 40;

    bool operator==(const Tariff&) const = default;
};

struct CostModel {
    Money maintenance_per_car_day = 5;
    Money idle_car_per_day = 15;

    bool operator==(const CostModel&) const = default;
};

struct MoneyReport {
    Money revenue = 0;
    Money loss = 0;
    Money overhead = 0;
    Money profit = 0;  // revenue - loss - overhead
    int gap = 0;

    bool operator==(const MoneyReport&) const = default;
};

/// daily_with_driver * with_driver + daily_no_driver * no_driver.
Money revenue(int with_driver, int no_driver, const Tariff& tariff);

/// Opportunity cost of unmet orders. A lost no-car order is priced at the
/// with-driver rate and a lost driver at the no-driver rate; that is the
/// arithmetic the loss table actually uses, swapped-looking as it is.
Money loss(int unavail_after_resched, int unavail_driver, const Tariff& tariff);

/// customers_in - customers_out, where customers_out counts fulfilled
/// orders plus both unavailability cancellations. Throws SimLogicError
/// when out > in (tally corruption).
int gap(int customers_in, int customers_out);

/// maintenance_per_car_day * fleet_size + idle_car_per_day * idle cars.
/// Throws SimLogicError when cars_used > fleet_size.
Money overhead(int fleet_size, int cars_used, const CostModel& costs);

/// Composes the three figures above into profit = revenue - loss - overhead.
MoneyReport daily_profit(const DailyTally& tally, int fleet_size, const Tariff& tariff,
                         const CostModel& costs);

}  // namespace rentsim
