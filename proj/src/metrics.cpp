#include "slegp/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace slegp {

bool DeliveryLedger::record_delivery(MessageId message, DeviceId device,
                                     std::uint64_t tick) {
    if (message.origin == device) {
        throw std::invalid_argument(
            "record_delivery: self-delivery is not a delivery");
    }
    auto [it, inserted] = seen_.insert({message, device});
    if (!inserted) return false;
    records_.push_back({message, device, tick});
    return true;
}

std::size_t DeliveryLedger::delivered_by(std::uint64_t up_to_tick) const {
    // Records are appended in nondecreasing tick order.
    auto it = std::upper_bound(
        records_.begin(), records_.end(), up_to_tick,
        [](std::uint64_t t, const DeliveryRecord& r) { return t < r.tick; });
    return static_cast<std::size_t>(it - records_.begin());
}

bool DeliveryLedger::contains(MessageId message, DeviceId device) const {
    return seen_.count({message, device}) > 0;
}

double throughput(const DeliveryLedger& ledger, int n, int messages_per_device,
                  std::uint64_t up_to_tick) {
    const double denominator =
        (4.0 * n * n - 2.0 * n) * messages_per_device;
    return static_cast<double>(ledger.delivered_by(up_to_tick)) / denominator;
}

std::optional<std::size_t> time_to_fraction(std::span<const double> series,
                                            double target) {
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i] >= target) return i;
    }
    return std::nullopt;
}

}  // namespace slegp
