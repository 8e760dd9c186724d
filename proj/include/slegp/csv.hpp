#ifndef SLEGP_CSV_HPP
#define SLEGP_CSV_HPP

#include <string>

#include "slegp/engine.hpp"
#include "slegp/experiments.hpp"

namespace slegp {

// Header `tick,delivered,throughput`; one row per tick with the cumulative
// delivery count. Throws std::runtime_error (with path and cause) on I/O
// failure.
void write_run_csv(const RunResult& result, const std::string& path);

// Header `param,mean_throughput,std_throughput,seeds`.
void write_sweep_csv(const SweepTable& table, const std::string& path);

}  // namespace slegp

#endif
