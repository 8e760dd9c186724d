#ifndef SLEGP_EXPERIMENTS_HPP
#define SLEGP_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slegp/engine.hpp"

namespace slegp {

struct SweepRow {
    double param = 0.0;
    double mean_throughput = 0.0;
    double std_throughput = 0.0;
    int seeds = 0;
};

using SweepTable = std::vector<SweepRow>;

struct TimeSeriesResult {
    // One row per simulated minute (param = minute), minute 0 included.
    SweepTable per_minute;
    // Mean first minute at which the fraction is reached, nullopt when any
    // seed never reaches it within the horizon.
    std::optional<double> mean_minutes_to_90;
    std::optional<double> mean_minutes_to_full;
};

// Throughput at T as a function of M (personal messages per device).
SweepTable sweep_personal_messages(const SimConfig& base,
                                   std::span<const int> m_values,
                                   std::span<const std::uint64_t> seeds,
                                   int jobs = 1);

// Throughput at T as a function of the GM minimum residence time.
SweepTable sweep_gm_min(const SimConfig& base, std::span<const int> gm_values,
                        std::span<const std::uint64_t> seeds, int jobs = 1);

// Throughput at T as a function of the GO minimum residence time.
SweepTable sweep_go_min(const SimConfig& base, std::span<const int> go_values,
                        std::span<const std::uint64_t> seeds, int jobs = 1);

// Per-minute delivery progression plus the 90%/100% milestones.
TimeSeriesResult time_series_experiment(const SimConfig& base,
                                        std::span<const std::uint64_t> seeds,
                                        int jobs = 1);

// seed, seed+1, ..., seed+count-1
std::vector<std::uint64_t> seed_range(std::uint64_t seed, int count);

}  // namespace slegp

#endif
