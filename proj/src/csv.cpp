#include "slegp/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace slegp {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path +
                                 "': " + std::strerror(errno));
    }
    return out;
}

void close_or_throw(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string compact(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

}  // namespace

void write_run_csv(const RunResult& result, const std::string& path) {
    auto out = open_or_throw(path);
    out << "tick,delivered,throughput\n";
    for (std::size_t t = 0; t < result.throughput_series.size(); ++t) {
        const std::uint64_t tick = t + 1;
        out << tick << ',' << result.ledger.delivered_by(tick) << ','
            << fixed6(result.throughput_series[t]) << '\n';
    }
    close_or_throw(out, path);
}

void write_sweep_csv(const SweepTable& table, const std::string& path) {
    auto out = open_or_throw(path);
    out << "param,mean_throughput,std_throughput,seeds\n";
    for (const SweepRow& row : table) {
        out << compact(row.param) << ',' << fixed6(row.mean_throughput) << ','
            << fixed6(row.std_throughput) << ',' << row.seeds << '\n';
    }
    close_or_throw(out, path);
}

}  // namespace slegp
