#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqwpa/algo_registry.hpp"
#include "pqwpa/channel.hpp"
#include "pqwpa/handshake.hpp"

namespace pqwpa {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct CpuRates {
  double client_hz = 2.1e9;
  double ap_hz = 2.0e9;
  double server_hz = 2.0e9;
  friend bool operator==(const CpuRates&, const CpuRates&) = default;
};

// One fully resolved experiment.
struct Scenario {
  std::string id;
  EapMethod method = EapMethod::EapTls;
  // Registry name, or "classical+pq" for a hybrid certificate.
  std::string signature;
  // Registry name, hybrid pair, or "auto" to match the certificate level.
  std::string kem = "auto";
  BandProfile band = BandProfile::defaults(Band::Band2_4GHz);
  SignalSituation situation = SignalSituation::defaults(Situation::Excellent);
  RetryPolicy retry;
  WiredLink wired;
  ChainShape shape;
  HandshakeParams handshake;
  Bytes fragment_size = kDefaultFragmentSize;
  CpuRates cpu;
  // AP forwarding and local processing per frame.
  Duration ap_processing = std::chrono::microseconds(50);
  bool resumption = false;
  ResumptionMode resumption_mode = ResumptionMode::Stateful;
  unsigned repetitions = 100;
  std::uint64_t seed = kDefaultSeed;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ResolvedAlgorithms {
  SignatureSpec signature;
  KemSpec kem;
};

// "auto" picks X25519 for classical certificates, the named hybrid KEM for
// hybrid certificates and kem_for_level otherwise.
ResolvedAlgorithms resolve_algorithms(const Scenario& scenario, const Registry& registry);

// Throws InvalidArgument or UnknownAlgorithm.
void validate(const Scenario& scenario, const Registry& registry);

// Flights the scenario executes (full or resumed).
std::vector<Flight> scenario_flights(const Scenario& scenario, const Registry& registry);

// "<signature>/<method>/<band>/<situation>[/resumption]"
std::string default_scenario_id(const Scenario& scenario);

Duration crypto_time(Cycles cycles, double cpu_hz);

enum class AbortReason { None, DeliveryFailed, RoundTripLimitExceeded };

std::string_view to_string(AbortReason reason);

struct AuthReport {
  Duration total{0};
  Duration client_time{0};
  Duration ap_time{0};
  Duration server_time{0};
  std::size_t logical_eap_messages = 0;
  // Wireless frames put on the air, retransmissions included.
  std::size_t transmitted_frames = 0;
  bool aborted = false;
  AbortReason abort_reason = AbortReason::None;

  friend bool operator==(const AuthReport&, const AuthReport&) = default;
};

// One authentication. Deterministic in (scenario, run_index). Aborts are
// reported through the aborted flag, not thrown.
AuthReport run_auth(const Scenario& scenario, std::size_t run_index,
                    const Registry& registry = Registry::standard());

struct BatchStats {
  Duration median{0};
  Duration p95{0};
  Duration client_median{0};
  Duration ap_median{0};
  Duration server_median{0};
  double abort_rate = 0.0;
  std::size_t eap_messages = 0;
  std::size_t frames_median = 0;
  std::size_t completed_runs = 0;

  friend bool operator==(const BatchStats&, const BatchStats&) = default;
};

// Nearest-rank percentile of an unsorted sample; pct in (0, 100].
Duration nearest_rank(std::vector<Duration> sample, double pct);

// Throws AllRunsAborted.
BatchStats run_batch(const Scenario& scenario, const Registry& registry = Registry::standard());

struct MatrixRow {
  Scenario scenario;
  std::string algorithm;
  std::optional<BatchStats> stats;
  // Set instead of stats when the row failed.
  std::string error;
};

// One row per scenario, in input order. A failing row does not stop the
// others. jobs = 0 uses the hardware concurrency.
std::vector<MatrixRow> compare_matrix(std::span<const Scenario> scenarios,
                                      const Registry& registry = Registry::standard(),
                                      unsigned jobs = 0);

// Every evaluated certificate algorithm x situation x band, derived from
// `base` (RSA-2048 first, 2.4 GHz before 5 GHz).
std::vector<Scenario> evaluation_matrix(const Scenario& base);

}  // namespace pqwpa
