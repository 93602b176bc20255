#pragma once

#include <optional>
#include <random>
#include <string_view>

#include "pqwpa/errors.hpp"
#include "pqwpa/rng.hpp"
#include "pqwpa/units.hpp"

namespace pqwpa {

enum class Band { Band2_4GHz, Band5GHz };
enum class Situation { Excellent, Good, VeryWeak };

std::string_view to_string(Band band);
std::string_view to_string(Situation situation);
std::optional<Band> parse_band(std::string_view text);
std::optional<Situation> parse_situation(std::string_view text);

struct BandProfile {
  Band band = Band::Band2_4GHz;
  double data_rate_bps = 1e6;
  // Preamble, inter-frame spacing and MAC ACK, lumped per frame.
  Duration phy_mac_overhead = std::chrono::microseconds(300);

  // 1 Mbps at 2.4 GHz, 6 Mbps at 5 GHz.
  static BandProfile defaults(Band band);
  friend bool operator==(const BandProfile&, const BandProfile&) = default;
};

// Loss and backoff are calibration constants, not measurements.
struct SignalSituation {
  Situation situation = Situation::Excellent;
  double frame_loss_probability = 0.01;
  // Backoff before the first retry; doubles per further retry.
  Duration retry_backoff = std::chrono::microseconds(500);

  static SignalSituation defaults(Situation situation);
  friend bool operator==(const SignalSituation&, const SignalSituation&) = default;
};

struct RetryPolicy {
  unsigned attempt_cap = 10;
  Duration backoff_cap = std::chrono::milliseconds(8);
  friend bool operator==(const RetryPolicy&, const RetryPolicy&) = default;
};

// AP to RADIUS server link.
struct WiredLink {
  Duration one_way_latency = std::chrono::microseconds(500);
  double loss = 0.0;
  // Serialization rate; 0 disables the per-byte term.
  double bytes_per_second = 0.0;
  // RADIUS client wait before resending an unanswered packet.
  Duration retransmit_timeout = std::chrono::seconds(3);
  friend bool operator==(const WiredLink&, const WiredLink&) = default;
};

void validate(const BandProfile& profile);
void validate(const SignalSituation& situation);
void validate(const WiredLink& link);

Duration frame_airtime(Bytes bytes, const BandProfile& profile);

struct Transmission {
  Duration elapsed{0};
  unsigned attempts = 0;
};

// Backoff added before retry number `retry` (1-based).
Duration retry_backoff(const SignalSituation& situation, const RetryPolicy& policy,
                       unsigned retry);

// Sends one frame, retrying on loss. Throws DeliveryFailed once the attempt
// cap is reached without success.
template <std::uniform_random_bit_generator G>
Transmission transmit(Bytes bytes, const BandProfile& profile,
                      const SignalSituation& situation, G& rng,
                      const RetryPolicy& policy = {}) {
  const Duration airtime = frame_airtime(bytes, profile);
  Transmission t;
  for (unsigned attempt = 1; attempt <= policy.attempt_cap; ++attempt) {
    if (attempt > 1) t.elapsed += retry_backoff(situation, policy, attempt - 1);
    t.elapsed += airtime;
    t.attempts = attempt;
    if (unit_interval(rng) >= situation.frame_loss_probability) return t;
  }
  throw DeliveryFailed(policy.attempt_cap);
}

Duration wired_transit(Bytes bytes, const WiredLink& link);

}  // namespace pqwpa
