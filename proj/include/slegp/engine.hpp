#ifndef SLEGP_ENGINE_HPP
#define SLEGP_ENGINE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "slegp/metrics.hpp"
#include "slegp/protocol.hpp"
#include "slegp/world.hpp"

namespace slegp {

struct SimConfig {
    int n = 50;                     // devices per direction (2n total)
    double circuit_length = 1000.0; // L, meters
    double spacing = 20.0;          // D, meters
    double speed = 1.0;             // v, m/s
    int messages_per_device = 1;    // M
    int min_go = 9;                 // seconds
    int min_gm = 7;                 // seconds
    double switch_prob = 0.5;
    double range = 200.0;           // meters
    int bandwidth = 1;              // message selections per device per tick
    int total_ticks = 1000;         // T, seconds
    std::uint64_t seed = 1;

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

struct Simulation {
    SimConfig config;
    WorldState world;
    std::vector<DeviceState> devices;
    std::uint64_t tick = 0;
    std::mt19937_64 rng;
    DeliveryLedger ledger;
};

struct RunResult {
    DeliveryLedger ledger;
    // throughput_series[t] is the throughput after t+1 simulated seconds;
    // ledger ticks use the same 1-based clock.
    std::vector<double> throughput_series;
};

// Builds the initial simulation: ring layout, every device searching with a
// desynchronized residence clock, each seeded with its own M messages.
Simulation init(const SimConfig& config);

// One 1-second tick: motion, group maintenance, attachment, transmissions,
// mode switching, clock advance. Throws std::logic_error when the run is
// already finished.
void step(Simulation& sim);

// init + total_ticks steps.
RunResult run(const SimConfig& config);

}  // namespace slegp

#endif
