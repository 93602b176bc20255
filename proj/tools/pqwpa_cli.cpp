// pqwpa: WPA-Enterprise post-quantum authentication simulator.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <fmt/format.h>

#include "pqwpa/algo_registry.hpp"
#include "pqwpa/annoyance.hpp"
#include "pqwpa/errors.hpp"
#include "pqwpa/recommend.hpp"
#include "pqwpa/report.hpp"
#include "pqwpa/scenario_file.hpp"
#include "pqwpa/sim.hpp"

using namespace pqwpa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitAbort = 3;

struct RunOptions {
  std::string format = "csv";
  std::string out;
  std::string seed;
  unsigned reps = 0;
  unsigned jobs = 0;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output file (stdout when omitted)");
  cmd->add_option("--seed", o.seed, "base seed, decimal or 0x hex (default 0xc0ffee)");
  cmd->add_option("--reps", o.reps, "repetitions per scenario")->check(CLI::PositiveNumber);
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used == text.size() && text.front() != '-') return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("--seed: not a 64-bit integer: " + text);
}

void apply_overrides(std::vector<Scenario>& scenarios, const RunOptions& o) {
  for (auto& s : scenarios) {
    if (!o.seed.empty()) s.seed = parse_seed(o.seed);
    if (o.reps > 0) s.repetitions = o.reps;
  }
}

// Reports carry the seed; for CSV, whose columns are fixed, it goes to stderr.
int emit_rows(const std::vector<MatrixRow>& rows, const RunOptions& o) {
  const auto format = *parse_report_format(o.format);
  if (format == ReportFormat::Csv) {
    std::vector<std::uint64_t> seeds;
    for (const auto& r : rows) {
      if (std::find(seeds.begin(), seeds.end(), r.scenario.seed) == seeds.end()) {
        seeds.push_back(r.scenario.seed);
      }
    }
    std::string list;
    for (auto seed : seeds) list += fmt::format("{}{:#x}", list.empty() ? "" : ",", seed);
    fmt::print(stderr, "# seed={}\n", list);
  }
  write_document(emit_report(rows, format), o.out);
  int status = kExitOk;
  for (const auto& r : rows) {
    if (!r.stats) {
      fmt::print(stderr, "error: {}: {}\n", r.scenario.id, r.error);
      status = kExitAbort;
    }
  }
  return status;
}

int cmd_simulate(const std::string& file, const RunOptions& o) {
  auto set = parse_scenario_file(file);
  if (set.scenarios.size() != 1) {
    throw ParseError(fmt::format("simulate expects exactly one scenario, {} has {}", file,
                                 set.scenarios.size()));
  }
  apply_overrides(set.scenarios, o);
  const Registry registry(set.constants);
  return emit_rows(compare_matrix(set.scenarios, registry, 1), o);
}

int cmd_compare(const std::string& file, const std::string& method, const RunOptions& o) {
  ScenarioSet set;
  if (file.empty()) {
    Scenario base;
    if (method == "eap-ttls") base.method = EapMethod::EapTtls;
    set.scenarios = evaluation_matrix(base);
  } else {
    set = parse_scenario_file(file);
  }
  apply_overrides(set.scenarios, o);
  const Registry registry(set.constants);
  return emit_rows(compare_matrix(set.scenarios, registry, o.jobs), o);
}

// Full vs resumed handshake per evaluated algorithm, plus cache footprint.
int cmd_resumption(const std::string& situation, const std::string& band, const std::string& mode,
                   const RunOptions& o) {
  Scenario base;
  const auto sit = parse_situation(situation);
  const auto b = parse_band(band);
  if (!sit) throw InvalidArgument("unknown situation: " + situation);
  if (!b) throw InvalidArgument("unknown band: " + band);
  base.situation = SignalSituation::defaults(*sit);
  base.band = BandProfile::defaults(*b);
  base.resumption_mode = mode == "stateless" ? ResumptionMode::Stateless : ResumptionMode::Stateful;

  std::vector<Scenario> scenarios;
  for (const auto& sig : Registry::evaluated_signatures()) {
    for (bool resumed : {false, true}) {
      Scenario s = base;
      s.signature = sig;
      s.resumption = resumed;
      s.id = default_scenario_id(s);
      scenarios.push_back(std::move(s));
    }
  }
  apply_overrides(scenarios, o);
  const auto rows = compare_matrix(scenarios, Registry::standard(), o.jobs);

  const auto& registry = Registry::standard();
  std::string csv =
      "algorithm,cache_entry_bytes,server_bytes,client_bytes,full_median_ms,resumed_median_ms\n";
  nlohmann::ordered_json json;
  json["mode"] = to_string(base.resumption_mode);
  json["seed"] = fmt::format("{:#x}", rows.front().scenario.seed);
  auto& arr = json["rows"] = nlohmann::ordered_json::array();
  int status = kExitOk;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const auto sig = registry.resolve_signature(rows[i].scenario.signature);
    const auto storage = resumption_storage(sig, base.resumption_mode);
    const Bytes entry = session_cache_entry_bytes(sig);
    nlohmann::ordered_json j;
    j["algorithm"] = sig.name;
    j["cache_entry_bytes"] = entry;
    j["server_bytes"] = storage.server_bytes;
    j["client_bytes"] = storage.client_bytes;
    csv += fmt::format("{},{},{},{}", sig.name, entry, storage.server_bytes, storage.client_bytes);
    for (const auto* row : {&rows[i], &rows[i + 1]}) {
      const char* key = row == &rows[i] ? "full_median_ms" : "resumed_median_ms";
      if (row->stats) {
        const std::string ms = fmt::format("{:.3f}", to_millis(row->stats->median));
        csv += "," + ms;
        j[key] = std::stod(ms);
      } else {
        status = kExitAbort;
        csv += ",";
        j[key] = nullptr;
      }
    }
    csv += "\n";
    arr.push_back(std::move(j));
  }
  write_document(o.format == "csv" ? csv : json.dump(2) + "\n", o.out);
  return status;
}

int cmd_recommend(const std::string& method, unsigned chain, Bytes fragment_size,
                  const std::string& format, const std::string& out) {
  const auto& registry = Registry::standard();
  const EapMethod m = method == "eap-ttls" ? EapMethod::EapTtls : EapMethod::EapTls;
  const ChainShape shape(chain, ChainShape{}.cert_encoding_overhead(), ChainShape{}.handshake_overhead());
  std::vector<RecommendationVerdict> verdicts;
  for (const auto& name : Registry::evaluated_signatures()) {
    Scenario probe;
    probe.signature = name;
    const auto algos = resolve_algorithms(probe, registry);
    verdicts.push_back(
        classify_recommended(algos.signature, algos.kem, m, shape, fragment_size, registry));
  }
  write_document(format == "json" ? verdicts_to_json(verdicts) : verdicts_to_csv(verdicts), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-quantum WPA-Enterprise authentication simulator"};
  app.require_subcommand(1);

  RunOptions sim_opts;
  std::string sim_file;
  auto* simulate = app.add_subcommand("simulate", "run one scenario file");
  simulate->add_option("file", sim_file, "scenario file")->required();
  add_run_options(simulate, sim_opts);

  RunOptions cmp_opts;
  std::string cmp_file, cmp_method = "eap-tls";
  auto* compare = app.add_subcommand(
      "compare", "run a scenario matrix (default: 12 algorithms x 3 situations x 2 bands)");
  compare->add_option("file", cmp_file, "scenario file with a matrix or scenario list");
  compare->add_option("--method", cmp_method, "method for the default matrix")
      ->check(CLI::IsMember({"eap-tls", "eap-ttls"}));
  compare->add_option("--jobs", cmp_opts.jobs, "worker threads (0 = all cores)");
  add_run_options(compare, cmp_opts);

  RunOptions res_opts;
  std::string res_situation = "excellent", res_band = "2.4GHz", res_mode = "stateful";
  auto* resumption =
      app.add_subcommand("resumption", "full vs resumed handshake and cache footprint");
  resumption->add_option("--situation", res_situation, "excellent, good or very-weak");
  resumption->add_option("--band", res_band, "2.4GHz or 5GHz");
  resumption->add_option("--mode", res_mode, "stateful or stateless")
      ->check(CLI::IsMember({"stateful", "stateless"}));
  resumption->add_option("--jobs", res_opts.jobs, "worker threads (0 = all cores)");
  add_run_options(resumption, res_opts);

  std::string client_sig, server_sig, kem, ann_format = "table", ann_out;
  auto* annoyance = app.add_subcommand("annoyance", "quantum-annoyance audit of a deployment");
  annoyance->add_option("--client-sig", client_sig, "client certificate algorithm")->required();
  annoyance->add_option("--server-sig", server_sig, "server certificate algorithm")->required();
  annoyance->add_option("--kem", kem, "key exchange")->required();
  annoyance->add_option("--format", ann_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  annoyance->add_option("--out", ann_out, "output file (stdout when omitted)");

  std::string rec_method = "eap-tls", rec_format = "csv", rec_out;
  unsigned rec_chain = 1;
  Bytes rec_fragment = kDefaultFragmentSize;
  auto* recommend =
      app.add_subcommand("recommend", "message-count and cycle classification per algorithm");
  recommend->add_option("--method", rec_method)->check(CLI::IsMember({"eap-tls", "eap-ttls"}));
  recommend->add_option("--chain-length", rec_chain)->check(CLI::PositiveNumber);
  recommend->add_option("--fragment-size", rec_fragment)->check(CLI::PositiveNumber);
  recommend->add_option("--format", rec_format)->check(CLI::IsMember({"csv", "json"}));
  recommend->add_option("--out", rec_out, "output file (stdout when omitted)");

  std::string reg_out;
  auto* registry = app.add_subcommand("registry", "algorithm registry");
  registry->require_subcommand(1);
  auto* reg_export = registry->add_subcommand("export", "write the registry as CSV");
  reg_export->add_option("--out", reg_out, "output file (stdout when omitted)");

  auto* reference = app.add_subcommand("reference", "scenario-file keys and defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*simulate) return cmd_simulate(sim_file, sim_opts);
    if (*compare) return cmd_compare(cmp_file, cmp_method, cmp_opts);
    if (*resumption) return cmd_resumption(res_situation, res_band, res_mode, res_opts);
    if (*annoyance) {
      const auto audit = evaluate_deployment(client_sig, server_sig, kem);
      write_document(ann_format == "json" ? audit_to_json(audit) : audit_to_table(audit), ann_out);
      return kExitOk;
    }
    if (*recommend) return cmd_recommend(rec_method, rec_chain, rec_fragment, rec_format, rec_out);
    if (*reg_export) {
      write_document(Registry::standard().export_csv(), reg_out);
      return kExitOk;
    }
    if (*reference) {
      write_document(scenario_reference(), "");
      return kExitOk;
    }
  } catch (const ParseError& e) {
    fmt::print(stderr, "parse error: {}\n", e.what());
    return kExitParse;
  } catch (const UnknownAlgorithm& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitParse;
  } catch (const InvalidArgument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitParse;
  } catch (const AllRunsAborted& e) {
    fmt::print(stderr, "aborted: {}\n", e.what());
    return kExitAbort;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
