#include "slegp/engine.hpp"

#include <stdexcept>
#include <string>

namespace slegp {

void SimConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (circuit_length <= 0.0)
        throw std::invalid_argument("config: circuit_length must be > 0");
    if (spacing <= 0.0)
        throw std::invalid_argument("config: spacing must be > 0");
    if (speed < 0.0) throw std::invalid_argument("config: speed must be >= 0");
    if (messages_per_device < 1)
        throw std::invalid_argument("config: messages must be >= 1");
    if (min_go < 0) throw std::invalid_argument("config: min_go must be >= 0");
    if (min_gm < 0) throw std::invalid_argument("config: min_gm must be >= 0");
    if (switch_prob < 0.0 || switch_prob > 1.0)
        throw std::invalid_argument("config: switch_prob must be in [0,1]");
    if (range <= 0.0) throw std::invalid_argument("config: range must be > 0");
    if (bandwidth < 1)
        throw std::invalid_argument("config: bandwidth must be >= 1");
    if (total_ticks < 0)
        throw std::invalid_argument("config: ticks must be >= 0");
    if (static_cast<double>(n) * spacing > circuit_length)
        throw std::invalid_argument("config: n*spacing exceeds circuit_length");
}

Simulation init(const SimConfig& config) {
    config.validate();
    Simulation sim;
    sim.config = config;
    sim.world = initial_world(config.n, config.circuit_length, config.spacing,
                              config.speed);
    sim.rng.seed(config.seed);

    const auto device_count = static_cast<DeviceId>(2 * config.n);
    sim.devices.resize(device_count);
    std::uniform_int_distribution<std::uint32_t> desync(
        0, static_cast<std::uint32_t>(config.min_gm));
    for (DeviceId d = 0; d < device_count; ++d) {
        DeviceState& dev = sim.devices[d];
        dev.id = d;
        dev.mode = Mode::searching();
        dev.ticks_in_mode = desync(sim.rng);
        for (int s = 0; s < config.messages_per_device; ++s) {
            Message m;
            m.id = {d, static_cast<std::uint32_t>(s)};
            m.utility = 1.0;
            m.size_units = 1.0;
            m.created_tick = 0;
            integrate_message(dev, m);
        }
    }
    return sim;
}

namespace {

void deliver(Simulation& sim, const Message& message, DeviceId receiver) {
    if (integrate_message(sim.devices[receiver], message)) {
        sim.ledger.record_delivery(message.id, receiver, sim.tick + 1);
    }
}

}  // namespace

void step(Simulation& sim) {
    if (sim.tick >= static_cast<std::uint64_t>(sim.config.total_ticks)) {
        throw std::logic_error("step: simulation already finished");
    }
    const auto device_count = static_cast<DeviceId>(sim.devices.size());
    const SimConfig& cfg = sim.config;

    // (1) motion
    advance(sim.world, 1.0);

    // (2) group maintenance: drop attachments whose owner stopped being a
    // GO or moved out of range. The GM residence clock keeps running.
    for (DeviceId d = 0; d < device_count; ++d) {
        DeviceState& dev = sim.devices[d];
        if (dev.mode.kind != ModeKind::MemberAttached) continue;
        const DeviceId owner = dev.mode.owner;
        const bool owner_is_go = sim.devices[owner].mode.is_group_owner();
        const double dist =
            circuit_distance(sim.world.positions[d], sim.world.positions[owner],
                             sim.world.circuit_length);
        if (!owner_is_go || dist > cfg.range) dev.mode = Mode::searching();
    }

    // (3) attachment: searching devices pick a reachable GO uniformly.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (DeviceId d = 0; d < device_count; ++d) {
        DeviceState& dev = sim.devices[d];
        if (dev.mode.kind != ModeKind::MemberSearching) continue;
        std::vector<DeviceId> owners;
        for (DeviceId nb : neighbors(sim.world, d, cfg.range)) {
            if (sim.devices[nb].mode.is_group_owner()) owners.push_back(nb);
        }
        if (owners.empty()) continue;
        auto chosen = choose_group_owner(owners, {}, unit(sim.rng));
        dev.mode = Mode::attached(*chosen);
    }

    // (4) transmissions. Group membership is frozen for the phase.
    std::vector<std::vector<DeviceId>> members(device_count);
    for (DeviceId d = 0; d < device_count; ++d) {
        if (sim.devices[d].mode.kind == ModeKind::MemberAttached) {
            members[sim.devices[d].mode.owner].push_back(d);
        }
    }
    // GOs broadcast to all attached members.
    for (DeviceId d = 0; d < device_count; ++d) {
        if (!sim.devices[d].mode.is_group_owner()) continue;
        for (int slot = 0; slot < cfg.bandwidth; ++slot) {
            auto msg = select_message_to_broadcast(sim.devices[d]);
            if (!msg) continue;
            for (DeviceId m : members[d]) deliver(sim, *msg, m);
        }
    }
    // Attached GMs send to their GO, which relays to the rest of the group
    // within the same tick (intra-group UDP broadcast).
    for (DeviceId d = 0; d < device_count; ++d) {
        if (sim.devices[d].mode.kind != ModeKind::MemberAttached) continue;
        const DeviceId owner = sim.devices[d].mode.owner;
        for (int slot = 0; slot < cfg.bandwidth; ++slot) {
            auto msg = select_message_to_broadcast(sim.devices[d]);
            if (!msg) continue;
            deliver(sim, *msg, owner);
            for (DeviceId m : members[owner]) {
                if (m != d) deliver(sim, *msg, m);
            }
        }
    }

    // (5) mode switching; a GO that leaves disbands its group.
    for (DeviceId d = 0; d < device_count; ++d) {
        DeviceState& dev = sim.devices[d];
        const double draw = unit(sim.rng);
        const Mode next = maybe_switch_mode(
            dev, static_cast<std::uint32_t>(cfg.min_go),
            static_cast<std::uint32_t>(cfg.min_gm), cfg.switch_prob, draw);
        if (next.is_group_owner() == dev.mode.is_group_owner()) continue;
        const bool was_go = dev.mode.is_group_owner();
        dev.mode = next;
        dev.ticks_in_mode = 0;
        if (was_go) {
            for (DeviceId m = 0; m < device_count; ++m) {
                DeviceState& member = sim.devices[m];
                if (member.mode.kind == ModeKind::MemberAttached &&
                    member.mode.owner == d) {
                    member.mode = Mode::searching();
                }
            }
        }
    }

    // (6) clocks
    ++sim.tick;
    for (DeviceId d = 0; d < device_count; ++d) ++sim.devices[d].ticks_in_mode;
}

RunResult run(const SimConfig& config) {
    Simulation sim = init(config);
    RunResult result;
    result.throughput_series.reserve(
        static_cast<std::size_t>(config.total_ticks));
    const double denominator =
        (4.0 * config.n * config.n - 2.0 * config.n) *
        config.messages_per_device;
    for (int t = 0; t < config.total_ticks; ++t) {
        step(sim);
        result.throughput_series.push_back(
            static_cast<double>(sim.ledger.size()) / denominator);
    }
    result.ledger = std::move(sim.ledger);
    return result;
}

}  // namespace slegp
