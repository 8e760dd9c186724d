#ifndef SLEGP_WORLD_HPP
#define SLEGP_WORLD_HPP

#include <vector>

#include "slegp/protocol.hpp"

namespace slegp {

// Devices on a closed circuit of length L, indexed by DeviceId. Positions
// are arc coordinates in [0, L); directions are +1 (clockwise) or -1.
struct WorldState {
    double circuit_length = 0.0;
    double speed = 0.0;
    std::vector<double> positions;
    std::vector<int> directions;

    std::size_t device_count() const { return positions.size(); }
};

// Lays out n clockwise devices at k*D and n counterclockwise devices at
// k*D + D/2, all moving at speed v. Throws std::invalid_argument when
// n*D > L (the ring cannot hold the devices at the requested spacing).
WorldState initial_world(int n, double L, double D, double v);

// Moves every device by direction * speed * dt along the circuit,
// wrapping into [0, L).
void advance(WorldState& world, double dt);

// Shorter arc between two circuit coordinates; symmetric, in [0, L/2].
double circuit_distance(double a, double b, double L);

// All other devices within `range` of `device` by circuit distance, in
// ascending id order. Throws std::out_of_range for an unknown device.
std::vector<DeviceId> neighbors(const WorldState& world, DeviceId device,
                                double range);

}  // namespace slegp

#endif
