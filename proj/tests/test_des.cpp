#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rentsim/des.hpp"
#include "rentsim/errors.hpp"

using namespace rentsim::des;
using rentsim::SimLogicError;

TEST_CASE("events fire in time order") {
    Calendar cal;
    cal.schedule(3.0, 0, 1);
    cal.schedule(1.0, 0, 2);
    cal.schedule(2.0, 0, 3);
    CHECK(cal.pending() == 3);
    CHECK(cal.next_event()->time == 1.0);
    CHECK(cal.next_event()->time == 2.0);
    CHECK(cal.next_event()->time == 3.0);
    CHECK_FALSE(cal.next_event().has_value());
}

TEST_CASE("simultaneous events fire in insertion order") {
    Calendar cal;
    cal.schedule(5.0, 0, 10);
    cal.schedule(5.0, 0, 20);
    cal.schedule(5.0, 0, 30);
    CHECK(cal.next_event()->entity_id == 10);
    CHECK(cal.next_event()->entity_id == 20);
    CHECK(cal.next_event()->entity_id == 30);
}

TEST_CASE("an event at the current clock fires before any later event") {
    Calendar cal;
    cal.schedule(1.0, 0, 1);
    cal.next_event();
    cal.schedule(1.0 + 1e-9, 0, 3);
    cal.schedule(1.0, 0, 2);  // at t = clock
    CHECK(cal.next_event()->entity_id == 2);
    CHECK(cal.next_event()->entity_id == 3);
}

TEST_CASE("scheduling into the past is a model bug") {
    Calendar cal;
    cal.schedule(5.0, 0, 1);
    cal.next_event();
    CHECK(cal.clock() == 5.0);
    CHECK_THROWS_AS(cal.schedule(4.0, 0, 2), SimLogicError);
}

TEST_CASE("extraction order equals a full sort, one million events") {
    // Oracle: stable sort by (time, seq) of everything scheduled.
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> time_dist(0.0, 1000.0);
    std::uniform_int_distribution<int> coarse(0, 99);  // force time collisions

    Calendar cal;
    std::vector<Event> scheduled;
    const int n = 1'000'000;
    scheduled.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = (i % 3 == 0) ? static_cast<double>(coarse(rng)) : time_dist(rng);
        cal.schedule(t, 0, i);
        scheduled.push_back(Event{t, static_cast<std::uint64_t>(i), 0, i});
    }
    std::sort(scheduled.begin(), scheduled.end(), [](const Event& a, const Event& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.seq < b.seq;
    });

    double last_clock = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto ev = cal.next_event();
        REQUIRE(ev.has_value());
        CHECK(ev->time == scheduled[i].time);
        CHECK(ev->seq == scheduled[i].seq);
        CHECK(cal.clock() >= last_clock);  // clock never runs backwards
        last_clock = cal.clock();
    }
    CHECK_FALSE(cal.next_event().has_value());
}

TEST_CASE("pool grants while capacity remains, then queues FIFO") {
    ResourcePool pool("desk", 1);
    CHECK(pool.request(1) == Acquire::Granted);
    CHECK(pool.in_use() == 1);
    CHECK(pool.request(2) == Acquire::Enqueued);
    CHECK(pool.request(3) == Acquire::Enqueued);
    CHECK(pool.queue_length() == 2);

    // head of queue takes the hold over; in_use unchanged
    CHECK(pool.release(1) == 2);
    CHECK(pool.in_use() == 1);
    CHECK(pool.release(2) == 3);
    CHECK(pool.release(3) == std::nullopt);
    CHECK(pool.in_use() == 0);
}

TEST_CASE("zero-capacity pool always queues") {
    ResourcePool pool("ghost", 0);
    CHECK(pool.request(1) == Acquire::Enqueued);
    CHECK(pool.request(2) == Acquire::Enqueued);
    CHECK(pool.in_use() == 0);
}

TEST_CASE("double request and foreign release are logic errors") {
    ResourcePool pool("desk", 2);
    pool.request(1);
    CHECK_THROWS_AS(pool.request(1), SimLogicError);
    CHECK_THROWS_AS(pool.release(99), SimLogicError);
    pool.request(2);
    pool.request(3);  // queued
    CHECK_THROWS_AS(pool.request(3), SimLogicError);  // already waiting
}

TEST_CASE("random request/release agrees with a reference counter") {
    // Oracle: plain counters plus a FIFO list, no pool machinery.
    std::mt19937_64 rng(777);
    for (const int capacity : {0, 1, 2, 5}) {
        ResourcePool pool("p", capacity);
        std::vector<int> ref_holders;
        std::vector<int> ref_queue;
        int grants = 0;
        int releases = 0;
        int next_id = 0;

        for (int step = 0; step < 10000; ++step) {
            const bool do_request = ref_holders.empty() || (rng() % 2 == 0);
            if (do_request) {
                const int id = next_id++;
                const auto got = pool.request(id);
                if (static_cast<int>(ref_holders.size()) < capacity) {
                    CHECK(got == Acquire::Granted);
                    ref_holders.push_back(id);
                    ++grants;
                } else {
                    CHECK(got == Acquire::Enqueued);
                    ref_queue.push_back(id);
                }
            } else {
                const int victim = ref_holders[rng() % ref_holders.size()];
                std::erase(ref_holders, victim);
                const auto next = pool.release(victim);
                ++releases;
                if (!ref_queue.empty()) {
                    CHECK(next == ref_queue.front());  // FIFO fairness
                    ref_holders.push_back(ref_queue.front());
                    ref_queue.erase(ref_queue.begin());
                    ++grants;  // the hold moves over: one grant, one release
                } else {
                    CHECK_FALSE(next.has_value());
                }
            }
            CHECK(pool.in_use() == static_cast<int>(ref_holders.size()));
            CHECK(pool.in_use() <= capacity);
            CHECK(pool.queue_length() == ref_queue.size());
            if (!ref_queue.empty()) CHECK(pool.in_use() == capacity);
            CHECK(grants - releases == pool.in_use());  // conservation
        }
    }
}
