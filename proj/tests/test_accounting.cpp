#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rentsim/accounting.hpp"
#include "rentsim/errors.hpp"

using namespace rentsim;

namespace {
const Tariff kTariff{};    // 55 / 40
const CostModel kCosts{};  // 5 / 15
}  // namespace

TEST_CASE("revenue matches the reference revenue rows") {
    // (with_driver, no_driver) -> total
    const struct { int wd, nd; Money total; } rows[] = {
        {7, 28, 1505}, {6, 23, 1250}, {6, 30, 1530}, {4, 26, 1260}, {9, 39, 2055},
        {6, 32, 1610}, {4, 35, 1620}, {9, 28, 1615}, {9, 24, 1455},
    };
    for (const auto& r : rows) CHECK(revenue(r.wd, r.nd, kTariff) == r.total);
    CHECK(revenue(0, 0, kTariff) == 0);
}

TEST_CASE("loss matches the reference loss rows") {
    // A lost no-car order is priced at 55, a lost driver at 40.
    const struct { int no_car, no_driver; Money total; } rows[] = {
        {0, 5, 200}, {1, 1, 95}, {2, 1, 150}, {1, 1, 95}, {2, 3, 230},
        {1, 2, 135}, {2, 2, 190}, {2, 2, 190}, {2, 1, 150},
    };
    for (const auto& r : rows) CHECK(loss(r.no_car, r.no_driver, kTariff) == r.total);
}

TEST_CASE("gap matches the reference in/out rows") {
    const struct { int in, out, gap; } rows[] = {
        {48, 40, 8}, {35, 31, 4}, {46, 39, 7}, {41, 32, 9}, {56, 53, 3},
        {46, 41, 5}, {47, 43, 4}, {48, 41, 7}, {41, 36, 5},
    };
    for (const auto& r : rows) CHECK(gap(r.in, r.out) == r.gap);
    CHECK(gap(0, 0) == 0);
}

TEST_CASE("gap rejects out > in as tally corruption") {
    CHECK_THROWS_AS(gap(10, 11), SimLogicError);
}

TEST_CASE("overhead charges maintenance on the fleet and idleness on unused cars") {
    CHECK(overhead(40, 35, kCosts) == 275);  // 200 + 75
    CHECK(overhead(30, 30, kCosts) == 150);  // no idle cars
    CHECK(overhead(40, 0, kCosts) == 800);   // everything idle
    CHECK_THROWS_AS(overhead(40, 41, kCosts), SimLogicError);
}

TEST_CASE("overhead never increases when more cars are used") {
    for (int used = 1; used <= 40; ++used) {
        CHECK(overhead(40, used, kCosts) <= overhead(40, used - 1, kCosts));
    }
}

TEST_CASE("daily profit composes the three audited figures") {
    // Hand-composed: revenue(7,28)=1505, loss(0,5)=200, overhead(40,35)=275,
    // so profit = 1505 - 200 - 275 = 1030; out = 7+28+0+5 = 40, gap = 8.
    DailyTally t;
    t.arrivals = 48;
    t.ordered_with_driver = 7;
    t.ordered_no_driver = 28;
    t.cancelled_ineligible = 3;
    t.cancelled_no_car = 0;
    t.cancelled_no_driver = 5;
    t.in_system_at_close = 5;
    t.cars_used = 35;
    t.drivers_used = 7;

    const MoneyReport m = daily_profit(t, 40, kTariff, kCosts);
    CHECK(m.revenue == 1505);
    CHECK(m.loss == 200);
    CHECK(m.overhead == 275);
    CHECK(m.profit == 1030);
    CHECK(m.gap == 8);
}

TEST_CASE("an empty day costs exactly the overhead of the idle fleet") {
    DailyTally t;
    const MoneyReport m = daily_profit(t, 40, kTariff, kCosts);
    CHECK(m.revenue == 0);
    CHECK(m.loss == 0);
    CHECK(m.overhead == 800);
    CHECK(m.profit == -800);
    CHECK(m.gap == 0);
}

TEST_CASE("profit equals revenue when loss and overhead vanish") {
    DailyTally t;
    t.arrivals = 10;
    t.ordered_with_driver = 4;
    t.ordered_no_driver = 6;
    t.cars_used = 10;
    t.drivers_used = 4;
    const MoneyReport m = daily_profit(t, 10, kTariff, CostModel{0, 0});
    CHECK(m.loss == 0);
    CHECK(m.overhead == 0);
    CHECK(m.profit == m.revenue);
}

TEST_CASE("revenue and loss are linear in their counts") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(0, 500);
    for (int i = 0; i < 1000; ++i) {
        const int a1 = d(rng), a2 = d(rng), b1 = d(rng), b2 = d(rng);
        CHECK(revenue(a1 + b1, a2 + b2, kTariff) ==
              revenue(a1, a2, kTariff) + revenue(b1, b2, kTariff));
        CHECK(loss(a1 + b1, a2 + b2, kTariff) == loss(a1, a2, kTariff) + loss(b1, b2, kTariff));
    }
}
