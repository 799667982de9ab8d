#include "rentsim/des.hpp"

#include <sstream>
#include <utility>

#include "rentsim/errors.hpp"

namespace rentsim::des {

void Calendar::schedule(double at, int kind, int entity_id) {
    if (at < clock_) {
        std::ostringstream msg;
        msg << "schedule at t=" << at << " before clock t=" << clock_
            << " (kind " << kind << ", entity " << entity_id << ")";
        throw SimLogicError(msg.str());
    }
    pending_.push(Event{at, next_seq_++, kind, entity_id});
}

std::optional<Event> Calendar::next_event() {
    if (pending_.empty()) return std::nullopt;
    Event ev = pending_.top();
    pending_.pop();
    clock_ = ev.time;
    return ev;
}

ResourcePool::ResourcePool(std::string name, int capacity)
    : name_(std::move(name)), capacity_(capacity) {
    if (capacity < 0) throw SimLogicError("pool '" + name_ + "': negative capacity");
}

Acquire ResourcePool::request(int entity_id) {
    if (holders_.contains(entity_id) || waiting_.contains(entity_id)) {
        throw SimLogicError("pool '" + name_ + "': double request by entity " +
                            std::to_string(entity_id));
    }
    if (in_use_ < capacity_) {
        ++in_use_;
        holders_.insert(entity_id);
        return Acquire::Granted;
    }
    waitq_.push_back(entity_id);
    waiting_.insert(entity_id);
    return Acquire::Enqueued;
}

std::optional<int> ResourcePool::release(int entity_id) {
    if (!holders_.erase(entity_id)) {
        throw SimLogicError("pool '" + name_ + "': release by non-holder entity " +
                            std::to_string(entity_id));
    }
    if (!waitq_.empty()) {
        const int next = waitq_.front();
        waitq_.pop_front();
        waiting_.erase(next);
        holders_.insert(next);  // in_use unchanged: the hold moves over
        return next;
    }
    --in_use_;
    return std::nullopt;
}

}  // namespace rentsim::des
