// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include <fmt/format.h>

#include "oracles.hpp"
#include "pqwpa/handshake.hpp"
#include "pqwpa/report.hpp"
#include "pqwpa/rng.hpp"
#include "pqwpa/sim.hpp"

using namespace pqwpa;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Registry& reg() { return Registry::standard(); }

Scenario cell(const std::string& sig, Band band, Situation sit) {
  Scenario s;
  s.signature = sig;
  s.band = BandProfile::defaults(band);
  s.situation = SignalSituation::defaults(sit);
  s.repetitions = 100;
  s.id = default_scenario_id(s);
  return s;
}

constexpr Situation kSituations[] = {Situation::Excellent, Situation::Good, Situation::VeryWeak};
constexpr Band kBands[] = {Band::Band2_4GHz, Band::Band5GHz};

Outcome registry_fidelity() {
  const auto t0 = Clock::now();
  const auto problems = oracle::golden_diff(oracle::read_file(PQWPA_GOLDEN_DIR "/registry.csv"),
                                            reg().export_csv());
  const double secs = seconds_since(t0);
  if (!problems.empty()) return {false, problems.front()};
  return {secs < 1.0, fmt::format("12 signature + 4 KEM rows identical, {:.3f}s", secs)};
}

Outcome session_cache() {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pqc;  // (table, model)
  std::uint64_t worst_lattice = 0;
  int exact = 0;
  for (const auto& [name, bytes] : oracle::cache_table()) {
    const auto model = session_cache_entry_bytes(reg().lookup_signature(name));
    const auto err = model > bytes ? model - bytes : bytes - model;
    if (name.rfind("SLH-DSA", 0) == 0) {
      if (err != 0) return {false, fmt::format("{}: {} vs {}", name, model, bytes)};
      ++exact;
    } else if (name != "RSA-2048") {
      worst_lattice = std::max(worst_lattice, err);
    }
    if (name != "RSA-2048") pqc.emplace_back(bytes, model);
  }
  if (worst_lattice > 20) return {false, fmt::format("lattice error {} bytes", worst_lattice)};
  for (const auto& a : pqc) {
    for (const auto& b : pqc) {
      if ((a.first < b.first) != (a.second < b.second)) return {false, "ordering differs"};
    }
  }
  return {true, fmt::format("{} SLH-DSA rows exact (table has {}), lattice max error {} B, "
                            "ordering of {} PQC rows matches",
                            exact, exact, worst_lattice, pqc.size())};
}

Outcome fragmentation() {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<Bytes> payload(0, 200'000), frag(1, 5000);
  for (int i = 0; i < 1000; ++i) {
    const Bytes p = payload(rng), fs = frag(rng);
    const auto got = fragment_flight({FlightLabel::ServerFlight, Direction::ServerToClient, p, {}}, fs);
    const auto want = oracle::fragments(p, fs);
    if (got.size() != want.size()) return {false, fmt::format("count {} / {}", p, fs)};
    for (std::size_t k = 0; k < got.size(); ++k) {
      if (got[k].bytes != want[k]) return {false, fmt::format("bytes {} / {} #{}", p, fs, k)};
    }
  }
  return {true, "1000 random (payload, fragment_size) pairs identical"};
}

Outcome message_thresholds() {
  std::string detail;
  bool ok = true;
  for (const char* n : {"Falcon-512", "Falcon-1024", "ML-DSA-44", "ML-DSA-65", "ML-DSA-87",
                        "SLH-DSA-SHA2-256f"}) {
    const auto& sig = reg().lookup_signature(n);
    const auto flights =
        build_flights(EapMethod::EapTls, sig, reg().kem_for_level(sig.level), ChainShape{});
    const auto m = count_eap_messages(flights, kDefaultFragmentSize);
    const bool want_below = std::string(n) != "SLH-DSA-SHA2-256f";
    ok &= (m < 100) == want_below && m == oracle::eap_messages(n);
    detail += fmt::format("{}{}={}", detail.empty() ? "" : " ", n, m);
  }
  return {ok, detail};
}

std::map<std::string, Duration> medians(const std::vector<Scenario>& scenarios) {
  std::map<std::string, Duration> out;
  for (const auto& row : compare_matrix(scenarios, reg(), 0)) {
    out[row.scenario.id] = row.stats ? row.stats->median : Duration::max();
  }
  return out;
}

Outcome ordering() {
  const auto t0 = Clock::now();
  const auto m = medians(evaluation_matrix(Scenario{}));
  auto med = [&](const std::string& sig, Band b, Situation s) {
    return m.at(default_scenario_id(cell(sig, b, s)));
  };
  for (const auto& sig : Registry::evaluated_signatures()) {
    for (auto sit : kSituations) {
      if (!(med(sig, Band::Band5GHz, sit) < med(sig, Band::Band2_4GHz, sit))) {
        return {false, fmt::format("(a) {} {}", sig, to_string(sit))};
      }
    }
  }
  const char* chain[] = {"RSA-2048", "Falcon-512", "ML-DSA-44", "SLH-DSA-SHA2-128f",
                         "SLH-DSA-SHA2-128s"};
  std::string b_detail;
  for (std::size_t i = 0; i < std::size(chain); ++i) {
    const auto here = med(chain[i], Band::Band2_4GHz, Situation::Excellent);
    b_detail += fmt::format("{}{:.0f}", i ? "<" : "", to_millis(here));
    if (i > 0 && !(med(chain[i - 1], Band::Band2_4GHz, Situation::Excellent) < here)) {
      return {false, fmt::format("(b) {} !< {}", chain[i - 1], chain[i])};
    }
  }
  const auto f_ex = med("SLH-DSA-SHA2-192f", Band::Band2_4GHz, Situation::Excellent);
  const auto s_ex = med("SLH-DSA-SHA2-192s", Band::Band2_4GHz, Situation::Excellent);
  const auto f_vw = med("SLH-DSA-SHA2-192f", Band::Band2_4GHz, Situation::VeryWeak);
  const auto s_vw = med("SLH-DSA-SHA2-192s", Band::Band2_4GHz, Situation::VeryWeak);
  if (!(f_ex < s_ex)) return {false, "(c) 192f !< 192s at excellent"};
  if (!(s_vw < f_vw)) return {false, "(c) 192s !< 192f at very-weak"};
  const double secs = seconds_since(t0);
  return {secs < 30.0,
          fmt::format("(a) 36/36 (b) {} ms (c) excellent 192f {:.0f} < 192s {:.0f}, very-weak "
                      "192s {:.0f} < 192f {:.0f} ms; {:.2f}s",
                      b_detail, to_millis(f_ex), to_millis(s_ex), to_millis(s_vw),
                      to_millis(f_vw), secs)};
}

Outcome resumption() {
  std::vector<Scenario> scenarios;
  for (const auto& sig : Registry::evaluated_signatures()) {
    for (auto sit : kSituations) {
      for (auto band : kBands) {
        auto full = cell(sig, band, sit);
        auto resumed = full;
        resumed.resumption = true;
        resumed.id = default_scenario_id(resumed);
        scenarios.push_back(full);
        scenarios.push_back(resumed);
      }
    }
  }
  const auto m = medians(scenarios);
  for (std::size_t i = 0; i < scenarios.size(); i += 2) {
    if (!(m.at(scenarios[i + 1].id) < m.at(scenarios[i].id))) {
      return {false, "resumption not faster for " + scenarios[i].id};
    }
  }
  // Spread over the PQC algorithms at each channel condition.
  double worst_ratio = 0;
  for (auto sit : kSituations) {
    for (auto band : kBands) {
      Duration rmin = Duration::max(), rmax{0}, fmin = Duration::max(), fmax{0};
      for (const auto& sig : Registry::evaluated_signatures()) {
        if (sig == "RSA-2048") continue;
        auto full = cell(sig, band, sit);
        auto resumed = full;
        resumed.resumption = true;
        const auto r = m.at(default_scenario_id(resumed));
        const auto f = m.at(full.id);
        rmin = std::min(rmin, r), rmax = std::max(rmax, r);
        fmin = std::min(fmin, f), fmax = std::max(fmax, f);
      }
      if (!(rmax - rmin < fmax - fmin)) {
        return {false, fmt::format("spread {} {}", to_string(band), to_string(sit))};
      }
      worst_ratio = std::max(worst_ratio, to_millis(rmax - rmin) / to_millis(fmax - fmin));
    }
  }
  return {true, fmt::format("72/72 resumed < full; resumed spread <= {:.1f}% of full spread",
                            100 * worst_ratio)};
}

Outcome ttls_hybrid() {
  std::vector<Scenario> scenarios;
  int pairs = 0;
  for (const auto& sig : Registry::evaluated_signatures()) {
    for (auto sit : kSituations) {
      for (auto band : kBands) {
        const auto tls = cell(sig, band, sit);
        auto ttls = tls;
        ttls.method = EapMethod::EapTtls;
        ttls.id = default_scenario_id(ttls);
        scenarios.push_back(tls);
        scenarios.push_back(ttls);
        if (sig != "RSA-2048") {
          auto hybrid = tls;
          hybrid.signature =
              reg().ecdsa_for_level(reg().lookup_signature(sig).level).name + "+" + sig;
          hybrid.id = default_scenario_id(hybrid);
          scenarios.push_back(hybrid);
        }
      }
    }
  }
  const auto m = medians(scenarios);
  for (const auto& s : scenarios) {
    if (s.method == EapMethod::EapTtls) {
      auto tls = s;
      tls.method = EapMethod::EapTls;
      if (!(m.at(s.id) <= m.at(default_scenario_id(tls)))) return {false, "TTLS > TLS: " + s.id};
      ++pairs;
    } else if (s.signature.find('+') != std::string::npos) {
      auto pure = s;
      pure.signature = s.signature.substr(s.signature.find('+') + 1);
      if (!(m.at(s.id) >= m.at(default_scenario_id(pure)))) {
        return {false, "hybrid < pure: " + s.id};
      }
      ++pairs;
    }
  }
  return {true, fmt::format("{} comparisons (72 TTLS, 66 hybrid) hold", pairs)};
}

Outcome channel_statistics() {
  std::string detail;
  bool ok = true;
  for (double p : {0.01, 0.05, 0.20}) {
    SplitMix64 rng(derive_seed(kDefaultSeed, {static_cast<std::uint64_t>(p * 1e6)}));
    SignalSituation s{Situation::Good, p, Duration{0}};
    const RetryPolicy uncapped{1000, std::chrono::milliseconds(8)};
    double sum = 0;
    for (int i = 0; i < 10'000; ++i) {
      sum += transmit(1398, BandProfile::defaults(Band::Band5GHz), s, rng, uncapped).attempts;
    }
    const double mean = sum / 10'000, expect = 1 / (1 - p);
    const double rel = std::abs(mean - expect) / expect;
    ok &= rel < 0.05;
    detail += fmt::format("{}p={:.2f}: {:.4f} vs {:.4f}", detail.empty() ? "" : "; ", p, mean,
                          expect);
  }
  return {ok, detail};
}

Outcome determinism_conservation() {
  const auto scenarios = evaluation_matrix(Scenario{});
  const auto a = emit_report(compare_matrix(scenarios, reg(), 0), ReportFormat::Csv);
  const auto b = emit_report(compare_matrix(scenarios, reg(), 1), ReportFormat::Csv);
  if (a != b) return {false, "reports differ between runs"};
  std::size_t checked = 0;
  for (auto s : scenarios) {
    for (bool resumed : {false, true}) {
      s.resumption = resumed;
      for (std::size_t i = 0; i < s.repetitions; ++i) {
        const auto r = run_auth(s, i);
        if (r.client_time + r.ap_time + r.server_time != r.total) {
          return {false, "conservation broken in " + s.id};
        }
        ++checked;
      }
    }
  }
  return {true, fmt::format("byte-identical reports ({} bytes); {} reports conserve time exactly",
                            a.size(), checked)};
}

Outcome runtime() {
  const auto t0 = Clock::now();
  const auto rows = compare_matrix(evaluation_matrix(Scenario{}), reg(), 0);
  const double secs = seconds_since(t0);
  const bool complete = std::all_of(rows.begin(), rows.end(), [](const MatrixRow& r) {
    return r.stats && r.scenario.repetitions == 100;
  });
  return {complete && secs < 60.0,
          fmt::format("{} rows x 100 repetitions in {:.3f}s", rows.size(), secs)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"registry fidelity", registry_fidelity},
      {"session-cache model", session_cache},
      {"fragmentation oracle", fragmentation},
      {"message-count thresholds", message_thresholds},
      {"ordering reproduction", ordering},
      {"resumption dominance", resumption},
      {"TTLS and hybrid deltas", ttls_hybrid},
      {"channel statistics", channel_statistics},
      {"determinism and conservation", determinism_conservation},
      {"desk-scale runtime", runtime},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    fmt::print("{} {:>2} {}: {}\n", o.pass ? "PASS" : "FAIL", n, name, o.detail);
  }
  fmt::print("{} of {} criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
