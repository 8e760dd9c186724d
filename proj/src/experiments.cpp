#include "slegp/experiments.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace slegp {

namespace {

// Runs every config, bounded by `jobs` worker threads. Results are in the
// input order regardless of scheduling.
std::vector<RunResult> run_all(const std::vector<SimConfig>& configs,
                               int jobs) {
    std::vector<RunResult> results(configs.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(configs.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < configs.size(); ++i) {
            results[i] = run(configs[i]);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < configs.size();
                 i = next.fetch_add(1)) {
                results[i] = run(configs[i]);
            }
        });
    }
    for (auto& t : workers) t.join();
    return results;
}

SweepRow summarize(double param, std::span<const double> values) {
    SweepRow row;
    row.param = param;
    row.seeds = static_cast<int>(values.size());
    if (values.empty()) return row;
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) /
        static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    row.mean_throughput = mean;
    row.std_throughput = std::sqrt(var);
    return row;
}

template <typename Mutate>
SweepTable sweep(const SimConfig& base, std::span<const int> values,
                 std::span<const std::uint64_t> seeds, int jobs,
                 Mutate mutate) {
    std::vector<SimConfig> configs;
    configs.reserve(values.size() * seeds.size());
    for (int v : values) {
        for (std::uint64_t s : seeds) {
            SimConfig cfg = base;
            mutate(cfg, v);
            cfg.seed = s;
            configs.push_back(cfg);
        }
    }
    const auto results = run_all(configs, jobs);
    SweepTable table;
    table.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<double> final_throughput;
        final_throughput.reserve(seeds.size());
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            const auto& series =
                results[i * seeds.size() + s].throughput_series;
            final_throughput.push_back(series.empty() ? 0.0 : series.back());
        }
        table.push_back(summarize(values[i], final_throughput));
    }
    return table;
}

}  // namespace

SweepTable sweep_personal_messages(const SimConfig& base,
                                   std::span<const int> m_values,
                                   std::span<const std::uint64_t> seeds,
                                   int jobs) {
    return sweep(base, m_values, seeds, jobs,
                 [](SimConfig& c, int m) { c.messages_per_device = m; });
}

SweepTable sweep_gm_min(const SimConfig& base, std::span<const int> gm_values,
                        std::span<const std::uint64_t> seeds, int jobs) {
    return sweep(base, gm_values, seeds, jobs,
                 [](SimConfig& c, int gm) { c.min_gm = gm; });
}

SweepTable sweep_go_min(const SimConfig& base, std::span<const int> go_values,
                        std::span<const std::uint64_t> seeds, int jobs) {
    return sweep(base, go_values, seeds, jobs,
                 [](SimConfig& c, int go) { c.min_go = go; });
}

TimeSeriesResult time_series_experiment(const SimConfig& base,
                                        std::span<const std::uint64_t> seeds,
                                        int jobs) {
    std::vector<SimConfig> configs;
    configs.reserve(seeds.size());
    for (std::uint64_t s : seeds) {
        SimConfig cfg = base;
        cfg.seed = s;
        configs.push_back(cfg);
    }
    const auto results = run_all(configs, jobs);

    TimeSeriesResult out;
    const int minutes = base.total_ticks / 60;
    out.per_minute.push_back(summarize(
        0.0, std::vector<double>(seeds.size(), 0.0)));
    for (int minute = 1; minute <= minutes; ++minute) {
        std::vector<double> at_minute;
        at_minute.reserve(seeds.size());
        for (const auto& r : results) {
            at_minute.push_back(
                r.throughput_series[static_cast<std::size_t>(minute) * 60 - 1]);
        }
        out.per_minute.push_back(summarize(minute, at_minute));
    }

    auto milestone = [&](double target) -> std::optional<double> {
        double total_minutes = 0.0;
        for (const auto& r : results) {
            auto idx = time_to_fraction(r.throughput_series, target);
            if (!idx) return std::nullopt;
            // series index t is the state after t+1 seconds
            total_minutes += static_cast<double>(*idx + 1) / 60.0;
        }
        return total_minutes / static_cast<double>(results.size());
    };
    out.mean_minutes_to_90 = milestone(0.9);
    out.mean_minutes_to_full = milestone(1.0);
    return out;
}

std::vector<std::uint64_t> seed_range(std::uint64_t seed, int count) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) seeds.push_back(seed + i);
    return seeds;
}

}  // namespace slegp
