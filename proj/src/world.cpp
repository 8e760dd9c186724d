#include "slegp/world.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slegp {

namespace {

double wrap(double x, double L) {
    x = std::fmod(x, L);
    if (x < 0.0) x += L;
    // fmod can return L after the negative fixup when x was a tiny negative.
    if (x >= L) x -= L;
    return x;
}

}  // namespace

WorldState initial_world(int n, double L, double D, double v) {
    if (n < 1 || L <= 0.0 || D <= 0.0) {
        throw std::invalid_argument("initial_world: n, L, D must be positive");
    }
    if (static_cast<double>(n) * D > L) {
        throw std::invalid_argument(
            "initial_world: n*D exceeds circuit length (" +
            std::to_string(n * D) + " > " + std::to_string(L) + ")");
    }
    WorldState world;
    world.circuit_length = L;
    world.speed = v;
    world.positions.reserve(2 * static_cast<std::size_t>(n));
    world.directions.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        world.positions.push_back(wrap(k * D, L));
        world.directions.push_back(+1);
    }
    for (int k = 0; k < n; ++k) {
        world.positions.push_back(wrap(k * D + D / 2.0, L));
        world.directions.push_back(-1);
    }
    return world;
}

void advance(WorldState& world, double dt) {
    const double L = world.circuit_length;
    for (std::size_t i = 0; i < world.positions.size(); ++i) {
        world.positions[i] =
            wrap(world.positions[i] + world.directions[i] * world.speed * dt, L);
    }
}

double circuit_distance(double a, double b, double L) {
    const double direct = std::fabs(a - b);
    return std::min(direct, L - direct);
}

std::vector<DeviceId> neighbors(const WorldState& world, DeviceId device,
                                double range) {
    if (device >= world.device_count()) {
        throw std::out_of_range("neighbors: unknown device " +
                                std::to_string(device));
    }
    std::vector<DeviceId> result;
    const double here = world.positions[device];
    for (std::size_t i = 0; i < world.device_count(); ++i) {
        if (i == device) continue;
        if (circuit_distance(here, world.positions[i], world.circuit_length) <=
            range) {
            result.push_back(static_cast<DeviceId>(i));
        }
    }
    return result;
}

}  // namespace slegp
