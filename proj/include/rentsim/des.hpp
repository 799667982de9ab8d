#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

namespace rentsim::des {

/// One pending state change. `kind` is model-defined; the engine only
/// orders and delivers.
struct Event {
    double time = 0.0;        // minutes from day open
    std::uint64_t seq = 0;    // insertion counter, unique per calendar
    int kind = 0;
    int entity_id = -1;
};

/// Future-event list. Extraction order is total: ascending time, ties
/// broken by ascending seq (insertion order), so simultaneous events fire
/// deterministically and independently of entity ids.
class Calendar {
public:
    /// Throws SimLogicError when `at` lies before the current clock.
    void schedule(double at, int kind, int entity_id);

    /// Removes and returns the minimum (time, seq) event and advances the
    /// clock to its time; nullopt when no events remain.
    std::optional<Event> next_event();

    double clock() const { return clock_; }
    std::size_t pending() const { return pending_.size(); }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> pending_;
    double clock_ = 0.0;
    std::uint64_t next_seq_ = 0;
};

enum class Acquire { Granted, Enqueued };

/// Counted capacity (staff, cars, drivers) with a FIFO wait queue.
/// Invariants: 0 <= in_use <= capacity; a nonempty queue implies the pool
/// is saturated.
class ResourcePool {
public:
    ResourcePool(std::string name, int capacity);

    /// Grants when capacity remains, otherwise appends to the wait queue.
    /// Throws SimLogicError if the entity already holds or already waits.
    Acquire request(int entity_id);

    /// Releases the entity's hold. When the queue is nonempty the head is
    /// dequeued and granted in its place (in_use unchanged) and returned.
    /// Throws SimLogicError when called by a non-holder.
    std::optional<int> release(int entity_id);

    const std::string& name() const { return name_; }
    int capacity() const { return capacity_; }
    int in_use() const { return in_use_; }
    int free() const { return capacity_ - in_use_; }
    std::size_t queue_length() const { return waitq_.size(); }
    bool holds(int entity_id) const { return holders_.contains(entity_id); }

private:
    std::string name_;
    int capacity_;
    int in_use_ = 0;
    std::deque<int> waitq_;
    std::unordered_set<int> holders_;
    std::unordered_set<int> waiting_;
};

}  // namespace rentsim::des
