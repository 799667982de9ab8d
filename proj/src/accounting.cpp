#include "rentsim/accounting.hpp"

#include <cassert>
#include <string>

#include "rentsim/errors.hpp"

namespace rentsim {

Money revenue(int with_driver, int no_driver, const Tariff& tariff) {
    assert(with_driver >= 0 && no_driver >= 0);
    return tariff.daily_with_driver * with_driver + tariff.daily_no_driver * no_driver;
}

Money loss(int unavail_after_resched, int unavail_driver, const Tariff& tariff) {
    assert(unavail_after_resched >= 0 && unavail_driver >= 0);
    return tariff.daily_with_driver * unavail_after_resched +
           tariff.daily_no_driver * unavail_driver;
}

int gap(int customers_in, int customers_out) {
    if (customers_out > customers_in) {
        throw SimLogicError("gap: customers_out " + std::to_string(customers_out) +
                            " exceeds customers_in " + std::to_string(customers_in));
    }
    return customers_in - customers_out;
}

Money overhead(int fleet_size, int cars_used, const CostModel& costs) {
    if (cars_used > fleet_size) {
        throw SimLogicError("overhead: cars_used " + std::to_string(cars_used) +
                            " exceeds fleet_size " + std::to_string(fleet_size));
    }
    return costs.maintenance_per_car_day * fleet_size +
           costs.idle_car_per_day * (fleet_size - cars_used);
}

MoneyReport daily_profit(const DailyTally& tally, int fleet_size, const Tariff& tariff,
                         const CostModel& costs) {
    MoneyReport report;
    report.revenue = revenue(tally.ordered_with_driver, tally.ordered_no_driver, tariff);
    report.loss = loss(tally.cancelled_no_car, tally.cancelled_no_driver, tariff);
    report.overhead = overhead(fleet_size, tally.cars_used, costs);
    report.profit = report.revenue - report.loss - report.overhead;
    const int customers_out = tally.ordered_with_driver + tally.ordered_no_driver +
                              tally.cancelled_no_car + tally.cancelled_no_driver;
    report.gap = gap(tally.arrivals, customers_out);
    return report;
}

}  // namespace rentsim
