#include "rentsim/model.hpp"

#include <sstream>
#include <utility>

#include "rentsim/errors.hpp"

namespace rentsim {

namespace {

enum EventKind : int {
    kArrival = 0,
    kVerifyDone,
    kSurveyDone,
    kContractDone,
    kRecheckDone,
    kEngineDone,
    kEquipmentDone,
    kInsuranceDone,
    kScheduleCheckDone,
    kCarRetryDone,
    kDriverAttempt,
    kDriverRetryDone,
    kEventKindCount,
};

constexpr const char* kEventKindNames[kEventKindCount] = {
    "arrival",
    "verify_done",
    "survey_done",
    "contract_done",
    "recheck_done",
    "engine_done",
    "equipment_done",
    "insurance_done",
    "schedule_check_done",
    "car_retry_done",
    "driver_attempt",
    "driver_retry_done",
};

/// Every duration a customer could need, drawn up front in arrival order.
/// Pool state never influences stream consumption, so two runs that differ
/// only in fleet or driver counts see identical demand days (the common
/// random numbers contract).
struct Draws {
    double verification;
    double survey;
    double driver_contract;
    double car_recheck;
    double engine;
    double equipment;
    double insurance;
    double schedule_check;
    double reschedule;
};

class DayRunner {
public:
    DayRunner(const ModelConfig& cfg, int day_index, RunObserver* observer)
        : cfg_(cfg),
          day_index_(day_index),
          obs_(observer),
          customer_service_("customer_service", cfg.servers.customer_service),
          maintenance_("maintenance", cfg.servers.maintenance),
          planning_("planning", cfg.servers.planning),
          driver_desk_("driver_scheduling", cfg.servers.driver_scheduling),
          cars_("cars", cfg.fleet_size),
          drivers_("drivers", cfg.driver_count) {}

    DayResult run() {
        auto arrival_stream =
            make_stream(cfg_.master_seed, stream_id_for(day_index_, StreamPurpose::Arrivals));
        auto service_stream =
            make_stream(cfg_.master_seed, stream_id_for(day_index_, StreamPurpose::ServiceTimes));
        auto bernoulli_stream =
            make_stream(cfg_.master_seed, stream_id_for(day_index_, StreamPurpose::Bernoullis));

        const std::vector<double> arrivals = generate_arrivals(cfg_, arrival_stream);
        customers_.reserve(arrivals.size());
        draws_.reserve(arrivals.size());
        for (std::size_t i = 0; i < arrivals.size(); ++i) {
            Customer c;
            c.id = static_cast<int>(i);
            c.arrival_min = arrivals[i];
            c.eligible = bernoulli_stream.next_bernoulli(cfg_.p_eligible);
            const bool wants = bernoulli_stream.next_bernoulli(cfg_.p_wants_driver);
            c.accepted_driver_offer = bernoulli_stream.next_bernoulli(cfg_.p_accept_driver_offer);
            c.accepted_reschedule = bernoulli_stream.next_bernoulli(cfg_.p_accept_reschedule);
            // An ineligible customer proceeds only under the driver scheme.
            c.wants_driver = c.eligible ? wants : c.accepted_driver_offer;
            customers_.push_back(c);

            Draws d;
            d.verification = sample(cfg_.dists.verification, service_stream);
            d.survey = sample(cfg_.dists.survey, service_stream);
            d.driver_contract = sample(cfg_.dists.driver_contract, service_stream);
            d.car_recheck = sample(cfg_.dists.car_recheck, service_stream);
            d.engine = sample(cfg_.dists.engine_recheck, service_stream);
            d.equipment = sample(cfg_.dists.equipment_recheck, service_stream);
            d.insurance = sample(cfg_.dists.insurance_recheck, service_stream);
            d.schedule_check = sample(cfg_.dists.schedule_check, service_stream);
            d.reschedule = sample(cfg_.dists.reschedule, service_stream);
            draws_.push_back(d);

            calendar_.schedule(c.arrival_min, kArrival, c.id);
        }

        while (auto ev = calendar_.next_event()) {
            if (ev->time > cfg_.day_length) break;  // hard close
            if (obs_) obs_->on_event(*ev);
            dispatch(*ev);
        }

        DayResult result;
        result.tally.arrivals = static_cast<int>(customers_.size());
        for (Customer& c : customers_) {
            if (!c.outcome) c.outcome = Outcome::InSystemAtClose;
            switch (*c.outcome) {
                case Outcome::OrderedNoDriver: ++result.tally.ordered_no_driver; break;
                case Outcome::OrderedWithDriver: ++result.tally.ordered_with_driver; break;
                case Outcome::CancelledIneligible: ++result.tally.cancelled_ineligible; break;
                case Outcome::CancelledNoCar: ++result.tally.cancelled_no_car; break;
                case Outcome::CancelledNoDriver: ++result.tally.cancelled_no_driver; break;
                case Outcome::InSystemAtClose: ++result.tally.in_system_at_close; break;
            }
        }
        result.tally.cars_used =
            result.tally.ordered_no_driver + result.tally.ordered_with_driver;
        result.tally.drivers_used = result.tally.ordered_with_driver;
        result.customers = std::move(customers_);
        return result;
    }

private:
    void dispatch(const des::Event& ev) {
        Customer& c = customers_[static_cast<std::size_t>(ev.entity_id)];
        const Draws& d = draws_[static_cast<std::size_t>(ev.entity_id)];
        const double now = ev.time;
        switch (ev.kind) {
            case kArrival:
                acquire(customer_service_, Step::CustomerService, c.id, now);
                break;
            case kVerifyDone:
                if (!c.eligible && !c.accepted_driver_offer) {
                    finish(c, Outcome::CancelledIneligible);
                    leave_step(c, Step::CustomerService, customer_service_, now);
                } else {
                    calendar_.schedule(now + d.survey, kSurveyDone, c.id);
                }
                break;
            case kSurveyDone:
                if (c.wants_driver) {
                    calendar_.schedule(now + d.driver_contract, kContractDone, c.id);
                } else {
                    calendar_.schedule(now + d.car_recheck, kRecheckDone, c.id);
                }
                break;
            case kContractDone:
                calendar_.schedule(now + d.car_recheck, kRecheckDone, c.id);
                break;
            case kRecheckDone:
                leave_step(c, Step::CustomerService, customer_service_, now);
                acquire(maintenance_, Step::Maintenance, c.id, now);
                break;
            case kEngineDone:
                calendar_.schedule(now + d.equipment, kEquipmentDone, c.id);
                break;
            case kEquipmentDone:
                calendar_.schedule(now + d.insurance, kInsuranceDone, c.id);
                break;
            case kInsuranceDone:
                leave_step(c, Step::Maintenance, maintenance_, now);
                if (c.wants_driver) {
                    // Driver package: straight to driver scheduling, no
                    // schedule re-check.
                    acquire(driver_desk_, Step::DriverScheduling, c.id, now);
                } else {
                    acquire(planning_, Step::Planning, c.id, now);
                }
                break;
            case kScheduleCheckDone:
                if (commit(cars_, c.id, now)) {
                    finish(c, Outcome::OrderedNoDriver);
                    leave_step(c, Step::Planning, planning_, now);
                } else if (c.accepted_reschedule) {
                    calendar_.schedule(now + d.reschedule, kCarRetryDone, c.id);
                } else {
                    finish(c, Outcome::CancelledNoCar);
                    leave_step(c, Step::Planning, planning_, now);
                }
                break;
            case kCarRetryDone:
                finish(c, commit(cars_, c.id, now) ? Outcome::OrderedNoDriver
                                                   : Outcome::CancelledNoCar);
                leave_step(c, Step::Planning, planning_, now);
                break;
            case kDriverAttempt:
                if (!commit(cars_, c.id, now)) {
                    finish(c, Outcome::CancelledNoCar);
                    leave_step(c, Step::DriverScheduling, driver_desk_, now);
                } else if (commit(drivers_, c.id, now)) {
                    finish(c, Outcome::OrderedWithDriver);
                    leave_step(c, Step::DriverScheduling, driver_desk_, now);
                } else if (c.accepted_reschedule) {
                    calendar_.schedule(now + d.reschedule, kDriverRetryDone, c.id);
                } else {
                    uncommit(cars_, c.id, now);
                    finish(c, Outcome::CancelledNoDriver);
                    leave_step(c, Step::DriverScheduling, driver_desk_, now);
                }
                break;
            case kDriverRetryDone:
                if (commit(drivers_, c.id, now)) {
                    finish(c, Outcome::OrderedWithDriver);
                } else {
                    uncommit(cars_, c.id, now);
                    finish(c, Outcome::CancelledNoDriver);
                }
                leave_step(c, Step::DriverScheduling, driver_desk_, now);
                break;
            default:
                throw SimLogicError("unknown event kind " + std::to_string(ev.kind));
        }
    }

    /// Request a department server; on grant the customer's service starts
    /// immediately, otherwise they wait in the pool's FIFO queue.
    void acquire(des::ResourcePool& pool, Step step, int id, double now) {
        const des::Acquire r = pool.request(id);
        notify_pool(now, pool,
                    r == des::Acquire::Granted ? PoolAction::Granted : PoolAction::Enqueued, id);
        if (r == des::Acquire::Granted) start_service(step, id, now);
    }

    void start_service(Step step, int id, double now) {
        Customer& c = customers_[static_cast<std::size_t>(id)];
        const Draws& d = draws_[static_cast<std::size_t>(id)];
        c.steps[static_cast<int>(step)].start = now;
        switch (step) {
            case Step::CustomerService:
                calendar_.schedule(now + d.verification, kVerifyDone, id);
                break;
            case Step::Maintenance:
                calendar_.schedule(now + d.engine, kEngineDone, id);
                break;
            case Step::Planning:
                calendar_.schedule(now + d.schedule_check, kScheduleCheckDone, id);
                break;
            case Step::DriverScheduling:
                // Recording activity only; the commit attempt itself takes
                // no service time.
                calendar_.schedule(now, kDriverAttempt, id);
                break;
        }
    }

    void leave_step(Customer& c, Step step, des::ResourcePool& pool, double now) {
        c.steps[static_cast<int>(step)].end = now;
        const std::optional<int> next = pool.release(c.id);
        notify_pool(now, pool, PoolAction::Released, c.id);
        if (next) {
            notify_pool(now, pool, PoolAction::GrantedFromQueue, *next);
            start_service(step, *next, now);
        }
    }

    /// Day-scoped commitment: grant only when a unit is free, never queue.
    bool commit(des::ResourcePool& pool, int id, double now) {
        if (pool.free() <= 0) return false;
        pool.request(id);
        notify_pool(now, pool, PoolAction::Granted, id);
        return true;
    }

    /// Return a committed unit after a failed order. Commit never queues,
    /// so there is no waiter to hand over to.
    void uncommit(des::ResourcePool& pool, int id, double now) {
        const std::optional<int> next = pool.release(id);
        if (next) throw SimLogicError("unexpected waiter on pool '" + pool.name() + "'");
        notify_pool(now, pool, PoolAction::Released, id);
    }

    void finish(Customer& c, Outcome outcome) {
        if (c.outcome) {
            throw SimLogicError("outcome assigned twice for customer " + std::to_string(c.id));
        }
        c.outcome = outcome;
    }

    void notify_pool(double now, const des::ResourcePool& pool, PoolAction action, int id) {
        if (obs_) obs_->on_pool(now, pool.name(), action, id, pool.in_use(), pool.capacity());
    }

    const ModelConfig& cfg_;
    int day_index_;
    RunObserver* obs_;
    des::Calendar calendar_;
    des::ResourcePool customer_service_;
    des::ResourcePool maintenance_;
    des::ResourcePool planning_;
    des::ResourcePool driver_desk_;
    des::ResourcePool cars_;
    des::ResourcePool drivers_;
    std::vector<Customer> customers_;
    std::vector<Draws> draws_;
};

void check_probability(double value, const char* key) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << key << " must be in [0, 1], got " << value;
        throw ConfigError(msg.str());
    }
}

void check_non_negative(int value, const char* key) {
    if (value < 0) {
        throw ConfigError(std::string(key) + " must be >= 0, got " + std::to_string(value));
    }
}

}  // namespace

const char* outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::OrderedNoDriver: return "ordered_no_driver";
        case Outcome::OrderedWithDriver: return "ordered_with_driver";
        case Outcome::CancelledIneligible: return "cancelled_ineligible";
        case Outcome::CancelledNoCar: return "cancelled_no_car";
        case Outcome::CancelledNoDriver: return "cancelled_no_driver";
        case Outcome::InSystemAtClose: return "in_system_at_close";
    }
    return "unknown";
}

const char* pool_action_name(PoolAction action) {
    switch (action) {
        case PoolAction::Granted: return "granted";
        case PoolAction::Enqueued: return "enqueued";
        case PoolAction::GrantedFromQueue: return "granted_from_queue";
        case PoolAction::Released: return "released";
    }
    return "unknown";
}

const char* event_kind_name(int kind) {
    if (kind < 0 || kind >= kEventKindCount) return "unknown";
    return kEventKindNames[kind];
}

void validate(const ModelConfig& cfg) {
    check_probability(cfg.p_eligible, "p_eligible");
    check_probability(cfg.p_wants_driver, "p_wants_driver");
    check_probability(cfg.p_accept_driver_offer, "p_accept_driver_offer");
    check_probability(cfg.p_accept_reschedule, "p_accept_reschedule");
    check_non_negative(cfg.fleet_size, "fleet_size");
    check_non_negative(cfg.driver_count, "driver_count");
    check_non_negative(cfg.servers.customer_service, "servers.customer_service");
    check_non_negative(cfg.servers.maintenance, "servers.maintenance");
    check_non_negative(cfg.servers.planning, "servers.planning");
    check_non_negative(cfg.servers.driver_scheduling, "servers.driver_scheduling");
    if (!(cfg.day_length > 0.0)) {
        std::ostringstream msg;
        msg << "day_length must be > 0, got " << cfg.day_length;
        throw ConfigError(msg.str());
    }
    validate(cfg.dists.arrival, "dist.arrival");
    validate(cfg.dists.verification, "dist.verification");
    validate(cfg.dists.survey, "dist.survey");
    validate(cfg.dists.driver_contract, "dist.driver_contract");
    validate(cfg.dists.car_recheck, "dist.car_recheck");
    validate(cfg.dists.engine_recheck, "dist.engine_recheck");
    validate(cfg.dists.equipment_recheck, "dist.equipment_recheck");
    validate(cfg.dists.insurance_recheck, "dist.insurance_recheck");
    validate(cfg.dists.schedule_check, "dist.schedule_check");
    validate(cfg.dists.reschedule, "dist.reschedule");
}

std::uint64_t stream_id_for(int day_index, StreamPurpose purpose) {
    return (static_cast<std::uint64_t>(day_index) << 3) | static_cast<std::uint64_t>(purpose);
}

std::vector<double> generate_arrivals(const ModelConfig& cfg, RandomStream& stream) {
    std::vector<double> times;
    double t = 0.0;
    for (;;) {
        t += sample(cfg.dists.arrival, stream);
        if (t >= cfg.day_length) break;
        times.push_back(t);
    }
    return times;
}

DayResult run_day(const ModelConfig& cfg, int day_index, RunObserver* observer) {
    return DayRunner(cfg, day_index, observer).run();
}

}  // namespace rentsim
