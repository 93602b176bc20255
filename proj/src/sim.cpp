#include "pqwpa/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "pqwpa/errors.hpp"
#include "pqwpa/rng.hpp"

namespace pqwpa {

ResolvedAlgorithms resolve_algorithms(const Scenario& scenario, const Registry& registry) {
  SignatureSpec sig = registry.resolve_signature(scenario.signature);
  if (canonical_name(scenario.kem) != "auto") {
    return {std::move(sig), registry.resolve_kem(scenario.kem)};
  }
  KemSpec kem = sig.is_classical()  ? registry.lookup_kem("X25519")
                : sig.is_hybrid()   ? registry.hybrid_kem_for_level(sig.level)
                                    : registry.kem_for_level(sig.level);
  return {std::move(sig), std::move(kem)};
}

void validate(const Scenario& s, const Registry& registry) {
  if (s.repetitions < 1) throw InvalidArgument("repetitions must be at least 1");
  if (s.fragment_size == 0) throw InvalidArgument("fragment_size must be positive");
  if (!(s.cpu.client_hz > 0 && s.cpu.ap_hz > 0 && s.cpu.server_hz > 0)) {
    throw InvalidArgument("CPU rates must be positive");
  }
  if (s.ap_processing.count() < 0) throw InvalidArgument("ap_processing must be >= 0");
  if (s.retry.attempt_cap < 1) throw InvalidArgument("attempt_cap must be at least 1");
  validate(s.band);
  validate(s.situation);
  validate(s.wired);
  resolve_algorithms(s, registry);
}

std::vector<Flight> scenario_flights(const Scenario& s, const Registry& registry) {
  const auto algos = resolve_algorithms(s, registry);
  if (s.resumption) {
    return resumption_flights(algos.signature, algos.kem, s.handshake, s.resumption_mode);
  }
  return build_flights(s.method, algos.signature, algos.kem, s.shape, s.handshake);
}

std::string default_scenario_id(const Scenario& s) {
  return fmt::format("{}/{}/{}/{}{}", s.signature, to_string(s.method), to_string(s.band.band),
                     to_string(s.situation.situation), s.resumption ? "/resumption" : "");
}

Duration crypto_time(Cycles cycles, double cpu_hz) {
  const double ns = static_cast<double>(cycles) * 1e9 / cpu_hz;
  return Duration(static_cast<Duration::rep>(std::llround(ns)));
}

std::string_view to_string(AbortReason reason) {
  switch (reason) {
    case AbortReason::None: return "none";
    case AbortReason::DeliveryFailed: return "delivery-failed";
    case AbortReason::RoundTripLimitExceeded: return "round-trip-limit";
  }
  return "?";
}

namespace {

// Stream tags for derive_seed.
constexpr std::uint64_t kWireless = 0;
constexpr std::uint64_t kWired = 1;
constexpr std::uint64_t kDataLeg = 0;
constexpr std::uint64_t kAckLeg = 1;

class Timeline {
 public:
  Timeline(const Scenario& s, std::size_t run_index) : s_(s), run_(run_index) {}

  void compute(const CryptoOp& op) {
    switch (op.entity) {
      case Entity::Client: report_.client_time += crypto_time(op.cycles, s_.cpu.client_hz); break;
      case Entity::AccessPoint: report_.ap_time += crypto_time(op.cycles, s_.cpu.ap_hz); break;
      case Entity::Server: report_.server_time += crypto_time(op.cycles, s_.cpu.server_hz); break;
    }
  }

  // Client <-> AP hop. Airtime and retries count toward the client segment.
  void wireless(Bytes bytes, FlightLabel label, std::size_t fragment, std::uint64_t leg) {
    SplitMix64 rng(derive_seed(s_.seed, {run_, static_cast<std::uint64_t>(label), fragment, leg,
                                         kWireless}));
    try {
      const auto t = transmit(bytes, s_.band, s_.situation, rng, s_.retry);
      report_.client_time += t.elapsed;
      report_.transmitted_frames += t.attempts;
    } catch (const DeliveryFailed&) {
      report_.transmitted_frames += s_.retry.attempt_cap;
      throw;
    }
  }

  // AP <-> RADIUS hop, with RADIUS-level retransmission on loss.
  void wired(Bytes bytes, FlightLabel label, std::size_t fragment, std::uint64_t leg) {
    const Duration once = wired_transit(bytes, s_.wired);
    if (s_.wired.loss <= 0.0) {
      report_.server_time += once;
      return;
    }
    SplitMix64 rng(derive_seed(s_.seed, {run_, static_cast<std::uint64_t>(label), fragment, leg,
                                         kWired}));
    for (unsigned attempt = 1; attempt <= s_.retry.attempt_cap; ++attempt) {
      if (unit_interval(rng) >= s_.wired.loss) {
        report_.server_time += once;
        return;
      }
      report_.server_time += s_.wired.retransmit_timeout;
    }
    throw DeliveryFailed(s_.retry.attempt_cap);
  }

  void forward() { report_.ap_time += s_.ap_processing; }

  void fragment(const Flight& flight, const Fragment& frag) {
    if (flight.direction == Direction::ServerToClient) {
      wired(frag.bytes, flight.label, frag.index, kDataLeg);
      forward();
      wireless(frag.bytes, flight.label, frag.index, kDataLeg);
      wireless(0, flight.label, frag.index, kAckLeg);
      forward();
      wired(0, flight.label, frag.index, kAckLeg);
    } else {
      wireless(frag.bytes, flight.label, frag.index, kDataLeg);
      forward();
      wired(frag.bytes, flight.label, frag.index, kDataLeg);
      wired(0, flight.label, frag.index, kAckLeg);
      forward();
      wireless(0, flight.label, frag.index, kAckLeg);
    }
  }

  AuthReport& report() { return report_; }

 private:
  const Scenario& s_;
  std::uint64_t run_;
  AuthReport report_;
};

AuthReport simulate(const Scenario& s, std::span<const Flight> flights, std::size_t run_index) {
  Timeline timeline(s, run_index);
  AuthReport& report = timeline.report();
  report.logical_eap_messages = count_eap_messages(flights, s.fragment_size);

  if (count_round_trips(flights, s.fragment_size) > s.handshake.round_trip_cap) {
    report.aborted = true;
    report.abort_reason = AbortReason::RoundTripLimitExceeded;
    return report;
  }

  try {
    for (const Flight& flight : flights) {
      // The sender computes before the flight departs, the receiver after it
      // has fully arrived.
      for (const auto& op : flight.crypto_ops) {
        if (op.entity == flight.sender()) timeline.compute(op);
      }
      for (const auto& frag : fragment_flight(flight, s.fragment_size)) {
        timeline.fragment(flight, frag);
      }
      for (const auto& op : flight.crypto_ops) {
        if (op.entity != flight.sender()) timeline.compute(op);
      }
    }
  } catch (const DeliveryFailed&) {
    report.aborted = true;
    report.abort_reason = AbortReason::DeliveryFailed;
  }
  report.total = report.client_time + report.ap_time + report.server_time;
  return report;
}

}  // namespace

AuthReport run_auth(const Scenario& scenario, std::size_t run_index, const Registry& registry) {
  validate(scenario, registry);
  if (run_index >= scenario.repetitions) {
    throw InvalidArgument(fmt::format("run_index {} outside {} repetitions", run_index,
                                      scenario.repetitions));
  }
  const auto flights = scenario_flights(scenario, registry);
  return simulate(scenario, flights, run_index);
}

Duration nearest_rank(std::vector<Duration> sample, double pct) {
  if (sample.empty()) throw InvalidArgument("percentile of an empty sample");
  if (!(pct > 0.0 && pct <= 100.0)) throw InvalidArgument("percentile must be in (0, 100]");
  std::sort(sample.begin(), sample.end());
  auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * static_cast<double>(sample.size())));
  rank = std::clamp<std::size_t>(rank, 1, sample.size());
  return sample[rank - 1];
}

BatchStats run_batch(const Scenario& scenario, const Registry& registry) {
  validate(scenario, registry);
  const auto flights = scenario_flights(scenario, registry);

  std::vector<Duration> totals, client, ap, server, frames;
  std::size_t aborted = 0;
  std::size_t messages = 0;
  for (std::size_t i = 0; i < scenario.repetitions; ++i) {
    const AuthReport r = simulate(scenario, flights, i);
    messages = r.logical_eap_messages;
    if (r.aborted) {
      ++aborted;
      continue;
    }
    totals.push_back(r.total);
    client.push_back(r.client_time);
    ap.push_back(r.ap_time);
    server.push_back(r.server_time);
    frames.push_back(Duration(static_cast<Duration::rep>(r.transmitted_frames)));
  }
  if (totals.empty()) {
    throw AllRunsAborted(fmt::format("all {} runs of {} aborted", scenario.repetitions,
                                     scenario.id.empty() ? default_scenario_id(scenario)
                                                         : scenario.id));
  }

  BatchStats stats;
  stats.median = nearest_rank(totals, 50);
  stats.p95 = nearest_rank(totals, 95);
  stats.client_median = nearest_rank(client, 50);
  stats.ap_median = nearest_rank(ap, 50);
  stats.server_median = nearest_rank(server, 50);
  stats.abort_rate = static_cast<double>(aborted) / scenario.repetitions;
  stats.eap_messages = messages;
  stats.frames_median = static_cast<std::size_t>(nearest_rank(frames, 50).count());
  stats.completed_runs = totals.size();
  return stats;
}

std::vector<MatrixRow> compare_matrix(std::span<const Scenario> scenarios,
                                      const Registry& registry, unsigned jobs) {
  if (scenarios.empty()) throw InvalidArgument("compare_matrix needs at least one scenario");
  std::vector<MatrixRow> rows(scenarios.size());

  auto run_row = [&](std::size_t i) {
    MatrixRow& row = rows[i];
    row.scenario = scenarios[i];
    if (row.scenario.id.empty()) row.scenario.id = default_scenario_id(row.scenario);
    try {
      row.algorithm = resolve_algorithms(row.scenario, registry).signature.name;
      row.stats = run_batch(row.scenario, registry);
    } catch (const Error& e) {
      if (row.algorithm.empty()) row.algorithm = row.scenario.signature;
      row.error = e.what();
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(scenarios.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < scenarios.size(); ++i) run_row(i);
    return rows;
  }

  // Rows write only to their own slot, so ordering never depends on timing.
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < scenarios.size(); i = next++) run_row(i);
      });
    }
  }
  return rows;
}

std::vector<Scenario> evaluation_matrix(const Scenario& base) {
  std::vector<Scenario> out;
  for (const auto& sig : Registry::evaluated_signatures()) {
    for (auto situation : {Situation::Excellent, Situation::Good, Situation::VeryWeak}) {
      for (auto band : {Band::Band2_4GHz, Band::Band5GHz}) {
        Scenario s = base;
        s.signature = sig;
        s.band = BandProfile::defaults(band);
        s.situation = SignalSituation::defaults(situation);
        s.id = default_scenario_id(s);
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace pqwpa
