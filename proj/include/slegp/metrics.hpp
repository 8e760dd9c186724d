#ifndef SLEGP_METRICS_HPP
#define SLEGP_METRICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "slegp/protocol.hpp"

namespace slegp {

struct DeliveryRecord {
    MessageId message;
    DeviceId device = 0;
    std::uint64_t tick = 0;
};

// First-time (message, device) deliveries with their tick stamps. Records
// are appended in nondecreasing tick order by the engine.
class DeliveryLedger {
  public:
    // True iff the pair was new; duplicates change nothing. Throws
    // std::invalid_argument on a self-delivery (device == message origin).
    bool record_delivery(MessageId message, DeviceId device,
                         std::uint64_t tick);

    std::size_t size() const { return records_.size(); }
    const std::vector<DeliveryRecord>& records() const { return records_; }
    std::size_t delivered_by(std::uint64_t up_to_tick) const;
    bool contains(MessageId message, DeviceId device) const;

  private:
    struct PairHash {
        std::size_t operator()(const std::pair<MessageId, DeviceId>& p) const {
            return MessageIdHash{}(p.first) * 1000003u ^ p.second;
        }
    };
    std::vector<DeliveryRecord> records_;
    std::unordered_set<std::pair<MessageId, DeviceId>, PairHash> seen_;
};

// Fraction of possible deliveries completed by up_to_tick: records with
// tick <= up_to_tick over (4n^2 - 2n) * M for 2n devices with M messages
// each.
double throughput(const DeliveryLedger& ledger, int n, int messages_per_device,
                  std::uint64_t up_to_tick);

// Smallest index whose series value reaches target, or nullopt.
std::optional<std::size_t> time_to_fraction(std::span<const double> series,
                                            double target);

}  // namespace slegp

#endif
