#include "pqwpa/channel.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace pqwpa {

namespace {

std::string normalized(std::string_view text) {
  std::string out;
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) out += static_cast<char>(std::tolower(u));
  }
  return out;
}

}  // namespace

std::string_view to_string(Band band) {
  return band == Band::Band2_4GHz ? "2.4GHz" : "5GHz";
}

std::string_view to_string(Situation situation) {
  switch (situation) {
    case Situation::Excellent: return "excellent";
    case Situation::Good: return "good";
    case Situation::VeryWeak: return "very-weak";
  }
  return "?";
}

std::optional<Band> parse_band(std::string_view text) {
  const std::string t = normalized(text);
  if (t == "24ghz" || t == "24" || t == "band24ghz") return Band::Band2_4GHz;
  if (t == "5ghz" || t == "5" || t == "band5ghz") return Band::Band5GHz;
  return std::nullopt;
}

std::optional<Situation> parse_situation(std::string_view text) {
  const std::string t = normalized(text);
  if (t == "excellent" || t == "a") return Situation::Excellent;
  if (t == "good" || t == "b") return Situation::Good;
  if (t == "veryweak" || t == "c") return Situation::VeryWeak;
  return std::nullopt;
}

BandProfile BandProfile::defaults(Band band) {
  BandProfile p;
  p.band = band;
  p.data_rate_bps = band == Band::Band2_4GHz ? 1e6 : 6e6;
  return p;
}

SignalSituation SignalSituation::defaults(Situation situation) {
  using std::chrono::microseconds;
  switch (situation) {
    case Situation::Excellent: return {situation, 0.01, microseconds(500)};
    case Situation::Good: return {situation, 0.05, microseconds(1000)};
    case Situation::VeryWeak: return {situation, 0.35, microseconds(4000)};
  }
  return {};
}

void validate(const BandProfile& profile) {
  if (!(profile.data_rate_bps > 0)) throw InvalidArgument("data_rate must be positive");
  if (profile.phy_mac_overhead.count() < 0) {
    throw InvalidArgument("phy_mac_overhead must be non-negative");
  }
}

void validate(const SignalSituation& situation) {
  const double p = situation.frame_loss_probability;
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("frame_loss_probability must be in [0,1)");
  if (situation.retry_backoff.count() < 0) {
    throw InvalidArgument("retry_backoff must be non-negative");
  }
}

void validate(const WiredLink& link) {
  if (link.one_way_latency.count() < 0) throw InvalidArgument("wired latency must be >= 0");
  if (!(link.loss >= 0.0 && link.loss < 1.0)) throw InvalidArgument("wired loss must be in [0,1)");
  if (link.bytes_per_second < 0) throw InvalidArgument("wired rate must be >= 0");
}

Duration frame_airtime(Bytes bytes, const BandProfile& profile) {
  const double ns = static_cast<double>(bytes) * 8.0 * 1e9 / profile.data_rate_bps;
  return profile.phy_mac_overhead + Duration(static_cast<Duration::rep>(std::llround(ns)));
}

Duration retry_backoff(const SignalSituation& situation, const RetryPolicy& policy,
                       unsigned retry) {
  Duration b = situation.retry_backoff;
  for (unsigned i = 1; i < retry && b < policy.backoff_cap; ++i) b *= 2;
  return std::min(b, policy.backoff_cap);
}

Duration wired_transit(Bytes bytes, const WiredLink& link) {
  Duration t = link.one_way_latency;
  if (link.bytes_per_second > 0) {
    const double ns = static_cast<double>(bytes) * 1e9 / link.bytes_per_second;
    t += Duration(static_cast<Duration::rep>(std::llround(ns)));
  }
  return t;
}

}  // namespace pqwpa
