#include "slegp/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace slegp {

Mode maybe_switch_mode(const DeviceState& state, std::uint32_t min_go,
                       std::uint32_t min_gm, double switch_prob,
                       double random_draw) {
    const std::uint32_t minimum =
        state.mode.is_group_owner() ? min_go : min_gm;
    if (state.ticks_in_mode <= minimum) return state.mode;
    if (random_draw >= switch_prob) return state.mode;
    return state.mode.is_group_owner() ? Mode::searching()
                                       : Mode::group_owner();
}

namespace {

std::optional<Message> take_slot(DeviceState& state, std::deque<MessageId>& queue) {
    const MessageId head = queue.front();
    queue.pop_front();
    queue.push_back(head);
    if (auto it = state.sent_marks.find(head); it != state.sent_marks.end()) {
        // Marked as recently transmitted: clear the mark, forfeit the slot.
        state.sent_marks.erase(it);
        return std::nullopt;
    }
    state.sent_marks.insert(head);
    return state.database.at(head);
}

}  // namespace

std::optional<Message> select_message_to_broadcast(DeviceState& state) {
    const bool have_personal = !state.personal_queue.empty();
    const bool have_relay = !state.relay_queue.empty();
    if (!have_personal && !have_relay) return std::nullopt;

    bool serve_personal;
    if (!have_relay) {
        serve_personal = true;
    } else if (!have_personal) {
        serve_personal = false;
    } else {
        serve_personal = state.personal_slot_debt >= 0;
    }

    if (serve_personal) {
        --state.personal_slot_debt;
        return take_slot(state, state.personal_queue);
    }
    ++state.personal_slot_debt;
    return take_slot(state, state.relay_queue);
}

bool integrate_message(DeviceState& state, const Message& message) {
    auto [it, inserted] = state.database.try_emplace(message.id, message);
    if (!inserted) return false;
    if (message.id.origin == state.id) {
        state.personal_queue.push_back(message.id);
    } else {
        state.relay_queue.push_back(message.id);
    }
    return true;
}

std::optional<DeviceId> choose_group_owner(std::span<const DeviceId> candidates,
                                           std::span<const double> weights,
                                           double random_draw) {
    if (candidates.empty()) return std::nullopt;
    if (weights.empty()) {
        auto index = static_cast<std::size_t>(
            random_draw * static_cast<double>(candidates.size()));
        index = std::min(index, candidates.size() - 1);
        return candidates[index];
    }
    if (weights.size() != candidates.size()) {
        throw std::invalid_argument(
            "choose_group_owner: weights length must match candidates");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (total <= 0.0) {
        throw std::invalid_argument("choose_group_owner: weights are all zero");
    }
    const double threshold = random_draw * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        cumulative += weights[i];
        if (threshold < cumulative) return candidates[i];
    }
    return candidates.back();
}

double recommended_gm_min_time(std::uint32_t reachable_count,
                               std::uint32_t target_groups, double min_go) {
    const double factor = static_cast<double>(reachable_count - 1) /
                          static_cast<double>(target_groups);
    return std::max(min_go, min_go * factor);
}

double queue_utility_rate(const QueueProfile& profile) {
    return profile.u_M *
           (profile.A * profile.B_s / profile.P_reload + profile.B * profile.v_M);
}

}  // namespace slegp
