#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "slegp/world.hpp"

using namespace slegp;

TEST_CASE("initial_world lays out two interleaved rings") {
    const WorldState w = initial_world(50, 1000.0, 20.0, 1.0);
    REQUIRE(w.device_count() == 100);
    for (int k = 0; k < 50; ++k) {
        CHECK(w.positions[k] == doctest::Approx(k * 20.0));
        CHECK(w.directions[k] == +1);
        CHECK(w.positions[50 + k] == doctest::Approx(k * 20.0 + 10.0));
        CHECK(w.directions[50 + k] == -1);
    }
}

TEST_CASE("initial_world minimal and invalid instances") {
    const WorldState w = initial_world(1, 1000.0, 20.0, 1.0);
    REQUIRE(w.device_count() == 2);
    CHECK(w.positions[0] == doctest::Approx(0.0));
    CHECK(w.positions[1] == doctest::Approx(10.0));

    CHECK_THROWS_AS(initial_world(51, 1000.0, 20.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(initial_world(0, 1000.0, 20.0, 1.0), std::invalid_argument);
}

TEST_CASE("advance wraps around the circuit") {
    WorldState w;
    w.circuit_length = 1000.0;
    w.speed = 1.0;
    w.positions = {999.0, 0.0, 500.0};
    w.directions = {+1, -1, +1};

    advance(w, 1.0);
    CHECK(w.positions[0] == doctest::Approx(0.0));
    CHECK(w.positions[1] == doctest::Approx(999.0));

    for (int i = 0; i < 59; ++i) advance(w, 1.0);
    CHECK(w.positions[2] == doctest::Approx(560.0));
}

TEST_CASE("advance keeps positions in [0, L)") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pos(0.0, 1000.0);
    WorldState w;
    w.circuit_length = 1000.0;
    w.speed = 3.7;
    for (int i = 0; i < 40; ++i) {
        w.positions.push_back(pos(rng));
        w.directions.push_back(i % 2 == 0 ? +1 : -1);
    }
    for (int t = 0; t < 500; ++t) {
        advance(w, 1.0);
        for (double p : w.positions) {
            CHECK(p >= 0.0);
            CHECK(p < 1000.0);
        }
    }
}

TEST_CASE("circuit_distance takes the shorter arc") {
    CHECK(circuit_distance(0.0, 990.0, 1000.0) == doctest::Approx(10.0));
    CHECK(circuit_distance(100.0, 350.0, 1000.0) == doctest::Approx(250.0));
    CHECK(circuit_distance(123.0, 123.0, 1000.0) == doctest::Approx(0.0));
}

TEST_CASE("circuit_distance is symmetric and bounded by L/2") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> pos(0.0, 1000.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = pos(rng), b = pos(rng);
        const double d = circuit_distance(a, b, 1000.0);
        CHECK(d == doctest::Approx(circuit_distance(b, a, 1000.0)));
        CHECK(d >= 0.0);
        CHECK(d <= 500.0);
    }
}

TEST_CASE("neighbors basics") {
    WorldState w;
    w.circuit_length = 1000.0;
    w.speed = 1.0;
    w.positions = {0.0, 150.0};
    w.directions = {+1, -1};
    CHECK(neighbors(w, 0, 200.0) == std::vector<DeviceId>{1});
    CHECK(neighbors(w, 1, 200.0) == std::vector<DeviceId>{0});

    w.positions[1] = 450.0;
    CHECK(neighbors(w, 0, 200.0).empty());
    CHECK(neighbors(w, 1, 200.0).empty());

    CHECK_THROWS_AS(neighbors(w, 5, 200.0), std::out_of_range);
}

TEST_CASE("paper layout gives 40 neighbors per device") {
    // +-200m around any device covers 10 same-direction and 10
    // opposite-direction devices on each side.
    const WorldState w = initial_world(50, 1000.0, 20.0, 1.0);
    for (DeviceId d = 0; d < 100; ++d) {
        CHECK(neighbors(w, d, 200.0).size() == 40);
    }
}

TEST_CASE("neighbors relation is symmetric") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> pos(0.0, 1000.0);
    WorldState w;
    w.circuit_length = 1000.0;
    w.speed = 1.0;
    for (int i = 0; i < 30; ++i) {
        w.positions.push_back(pos(rng));
        w.directions.push_back(+1);
    }
    for (DeviceId a = 0; a < 30; ++a) {
        const auto na = neighbors(w, a, 180.0);
        for (DeviceId b : na) {
            const auto nb = neighbors(w, b, 180.0);
            CHECK(std::find(nb.begin(), nb.end(), a) != nb.end());
        }
    }
}

TEST_CASE("advance preserves same-direction spacing exactly") {
    WorldState w = initial_world(10, 1000.0, 20.0, 1.0);
    const double before = circuit_distance(w.positions[2], w.positions[7],
                                           w.circuit_length);
    const double opp_before = circuit_distance(w.positions[2], w.positions[12],
                                               w.circuit_length);
    advance(w, 1.0);
    CHECK(circuit_distance(w.positions[2], w.positions[7], w.circuit_length) ==
          doctest::Approx(before));
    // Opposite-direction pairs close or open by 2*v*dt while away from the
    // L/2 fold.
    const double opp_after = circuit_distance(w.positions[2], w.positions[12],
                                              w.circuit_length);
    CHECK(std::abs(opp_after - opp_before) == doctest::Approx(2.0));
}
