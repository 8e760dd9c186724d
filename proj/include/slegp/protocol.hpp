#ifndef SLEGP_PROTOCOL_HPP
#define SLEGP_PROTOCOL_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace slegp {

using DeviceId = std::uint32_t;

struct MessageId {
    DeviceId origin = 0;
    std::uint32_t sequence = 0;

    friend bool operator==(const MessageId&, const MessageId&) = default;
};

struct MessageIdHash {
    std::size_t operator()(const MessageId& id) const noexcept {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(id.origin) << 32) | id.sequence);
    }
};

struct Message {
    MessageId id;
    double utility = 0.0;     // u_M
    double size_units = 1.0;  // drives transmission time v_M
    std::uint64_t created_tick = 0;
};

enum class ModeKind { GroupOwner, MemberSearching, MemberAttached };

// The coarse modes are GO and GM; MemberSearching and MemberAttached are
// both GM and share the GM residence clock.
struct Mode {
    ModeKind kind = ModeKind::MemberSearching;
    DeviceId owner = 0;  // valid only when kind == MemberAttached

    static Mode group_owner() { return {ModeKind::GroupOwner, 0}; }
    static Mode searching() { return {ModeKind::MemberSearching, 0}; }
    static Mode attached(DeviceId go) { return {ModeKind::MemberAttached, go}; }

    bool is_group_owner() const { return kind == ModeKind::GroupOwner; }
    bool is_member() const { return kind != ModeKind::GroupOwner; }

    friend bool operator==(const Mode&, const Mode&) = default;
};

struct DeviceState {
    DeviceId id = 0;
    Mode mode = Mode::searching();
    std::uint32_t ticks_in_mode = 0;
    std::unordered_map<MessageId, Message, MessageIdHash> database;
    std::deque<MessageId> personal_queue;  // messages this device originated
    std::deque<MessageId> relay_queue;     // everything received from peers
    std::unordered_set<MessageId, MessageIdHash> sent_marks;
    // Deficit counter for the >=50% personal-bandwidth allocation:
    // incremented when a relay slot is served, decremented on a personal
    // slot; personal is served whenever debt >= 0 and candidates exist.
    int personal_slot_debt = 0;
};

// Parameters of one utility queue for the dissemination rate computation.
struct QueueProfile {
    double u_M = 0.0;       // per-message utility
    double B_s = 1.0;       // queue size
    double P_reload = 1.0;  // reload period, seconds
    double v_M = 1.0;       // transmission time
    double A = 0.0;         // approaching devices
    double B = 0.0;         // co-traveling devices
};

// Evaluates the coarse mode switch for one 1s tick. Switching is only
// possible once ticks_in_mode strictly exceeds the minimum for the current
// mode, and then happens iff random_draw < switch_prob. Total function:
// returns the (possibly unchanged) mode.
Mode maybe_switch_mode(const DeviceState& state, std::uint32_t min_go,
                       std::uint32_t min_gm, double switch_prob,
                       double random_draw);

// One send-slot selection. Picks the queue under the deficit rule, then the
// queue head: an unmarked head is marked, rotated to the tail and returned;
// a marked head has its mark cleared, is rotated, and the slot is forfeited
// (nullopt). Empty queues yield nullopt without touching the debt counter.
std::optional<Message> select_message_to_broadcast(DeviceState& state);

// True iff the message was new; stores it and appends the id to the relay
// queue (personal queue when the device is the origin). Duplicates are
// ignored.
bool integrate_message(DeviceState& state, const Message& message);

// Picks a GO from the candidate list: uniform when no weights are given,
// weight-proportional otherwise. Deterministic in random_draw.
// Throws std::invalid_argument on a weights/candidates length mismatch or
// all-zero weights.
std::optional<DeviceId> choose_group_owner(
    std::span<const DeviceId> candidates,
    std::span<const double> weights,  // empty span = unweighted
    double random_draw);

// Density heuristic: GM residence (N-1)/c times the GO minimum, floored at
// the GO minimum so GO residence never exceeds GM residence.
double recommended_gm_min_time(std::uint32_t reachable_count,
                               std::uint32_t target_groups, double min_go);

// Utility flow rate of one queue: u_M * (A*B_s/P_reload + B*v_M).
double queue_utility_rate(const QueueProfile& profile);

}  // namespace slegp

#endif
