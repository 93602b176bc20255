#include "pqwpa/scenario_file.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "pqwpa/errors.hpp"

namespace pqwpa {

namespace {

int line_of(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.is_null() ? 0 : mark.line + 1;
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& key, const std::string& what) {
  throw ParseError(fmt::format("{}: {}", key, what), line_of(node), key);
}

std::string read_string(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail(node, key, "expected a scalar");
  return node.Scalar();
}

std::uint64_t read_u64(const YAML::Node& node, const std::string& key) {
  const std::string text = read_string(node, key);
  try {
    std::size_t used = 0;
    if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative");
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(node, key, fmt::format("expected a non-negative integer, got '{}'", text));
  }
}

double read_double(const YAML::Node& node, const std::string& key) {
  const std::string text = read_string(node, key);
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(node, key, fmt::format("expected a number, got '{}'", text));
  }
}

bool read_bool(const YAML::Node& node, const std::string& key) {
  const std::string text = read_string(node, key);
  if (text == "true" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "no" || text == "off") return false;
  fail(node, key, fmt::format("expected true or false, got '{}'", text));
}

Duration read_micros(const YAML::Node& node, const std::string& key) {
  const double us = read_double(node, key);
  if (us < 0) fail(node, key, "must be non-negative");
  return from_micros(us);
}

std::string micros_text(Duration d) { return fmt::format("{}", to_micros(d)); }

// Per-band and per-situation overrides from the `bands:` and `situations:`
// sections.
struct Context {
  std::map<Band, BandProfile> bands;
  std::map<Situation, SignalSituation> situations;

  Context() {
    for (auto b : {Band::Band2_4GHz, Band::Band5GHz}) bands[b] = BandProfile::defaults(b);
    for (auto s : {Situation::Excellent, Situation::Good, Situation::VeryWeak}) {
      situations[s] = SignalSituation::defaults(s);
    }
  }
};

struct KeySpec {
  const char* name;
  const char* help;
  std::function<void(Scenario&, const YAML::Node&, const Context&)> apply;
  std::function<std::string(const Scenario&)> value;
};

void set_shape(Scenario& s, const YAML::Node& node, const std::string& key, unsigned chain,
               Bytes cert, Bytes hs) {
  try {
    s.shape = ChainShape(chain, cert, hs);
  } catch (const InvalidArgument& e) {
    fail(node, key, e.what());
  }
}

// Application order matters: band and situation reset their profiles before
// the per-field overrides below them run.
const std::vector<KeySpec>& key_table() {
  using N = const YAML::Node&;
  using C = const Context&;
  static const std::vector<KeySpec> table = {
      {"id", "row identifier; defaults to signature/method/band/situation",
       [](Scenario& s, N n, C) { s.id = read_string(n, "id"); },
       [](const Scenario& s) { return s.id; }},
      {"method", "eap-tls | eap-ttls",
       [](Scenario& s, N n, C) {
         const auto v = read_string(n, "method");
         if (v == "eap-tls" || v == "EAP-TLS") {
           s.method = EapMethod::EapTls;
         } else if (v == "eap-ttls" || v == "EAP-TTLS") {
           s.method = EapMethod::EapTtls;
         } else {
           fail(n, "method", fmt::format("unknown method '{}'", v));
         }
       },
       [](const Scenario& s) {
         return std::string(s.method == EapMethod::EapTls ? "eap-tls" : "eap-ttls");
       }},
      {"signature", "certificate algorithm, or classical+pq for a hybrid (required)",
       [](Scenario& s, N n, C) { s.signature = read_string(n, "signature"); },
       [](const Scenario& s) { return s.signature; }},
      {"kem", "key exchange name, hybrid pair, or auto (level-matched)",
       [](Scenario& s, N n, C) { s.kem = read_string(n, "kem"); },
       [](const Scenario& s) { return s.kem; }},
      {"band", "2.4GHz | 5GHz",
       [](Scenario& s, N n, C ctx) {
         const auto v = read_string(n, "band");
         const auto b = parse_band(v);
         if (!b) fail(n, "band", fmt::format("unknown band '{}'", v));
         s.band = ctx.bands.at(*b);
       },
       [](const Scenario& s) { return std::string(to_string(s.band.band)); }},
      {"data_rate_bps", "minimum wireless data rate in bit/s (band default)",
       [](Scenario& s, N n, C) { s.band.data_rate_bps = read_double(n, "data_rate_bps"); },
       [](const Scenario& s) { return fmt::format("{}", s.band.data_rate_bps); }},
      {"phy_mac_overhead_us", "fixed airtime per frame in microseconds",
       [](Scenario& s, N n, C) { s.band.phy_mac_overhead = read_micros(n, "phy_mac_overhead_us"); },
       [](const Scenario& s) { return micros_text(s.band.phy_mac_overhead); }},
      {"situation", "excellent | good | very-weak",
       [](Scenario& s, N n, C ctx) {
         const auto v = read_string(n, "situation");
         const auto sit = parse_situation(v);
         if (!sit) fail(n, "situation", fmt::format("unknown situation '{}'", v));
         s.situation = ctx.situations.at(*sit);
       },
       [](const Scenario& s) { return std::string(to_string(s.situation.situation)); }},
      {"frame_loss_probability", "per-attempt wireless frame loss (situation default)",
       [](Scenario& s, N n, C) {
         s.situation.frame_loss_probability = read_double(n, "frame_loss_probability");
       },
       [](const Scenario& s) { return fmt::format("{}", s.situation.frame_loss_probability); }},
      {"retry_backoff_us", "backoff before the first retry; doubles per retry",
       [](Scenario& s, N n, C) { s.situation.retry_backoff = read_micros(n, "retry_backoff_us"); },
       [](const Scenario& s) { return micros_text(s.situation.retry_backoff); }},
      {"attempt_cap", "transmission attempts before the authentication aborts",
       [](Scenario& s, N n, C) {
         s.retry.attempt_cap = static_cast<unsigned>(read_u64(n, "attempt_cap"));
       },
       [](const Scenario& s) { return fmt::format("{}", s.retry.attempt_cap); }},
      {"backoff_cap_us", "upper bound of a single retry backoff",
       [](Scenario& s, N n, C) { s.retry.backoff_cap = read_micros(n, "backoff_cap_us"); },
       [](const Scenario& s) { return micros_text(s.retry.backoff_cap); }},
      {"wired_latency_us", "one-way AP to RADIUS latency",
       [](Scenario& s, N n, C) { s.wired.one_way_latency = read_micros(n, "wired_latency_us"); },
       [](const Scenario& s) { return micros_text(s.wired.one_way_latency); }},
      {"wired_loss", "AP to RADIUS packet loss",
       [](Scenario& s, N n, C) { s.wired.loss = read_double(n, "wired_loss"); },
       [](const Scenario& s) { return fmt::format("{}", s.wired.loss); }},
      {"wired_bytes_per_second", "wired serialization rate; 0 disables the term",
       [](Scenario& s, N n, C) {
         s.wired.bytes_per_second = read_double(n, "wired_bytes_per_second");
       },
       [](const Scenario& s) { return fmt::format("{}", s.wired.bytes_per_second); }},
      {"wired_retransmit_timeout_us", "RADIUS retransmission timeout",
       [](Scenario& s, N n, C) {
         s.wired.retransmit_timeout = read_micros(n, "wired_retransmit_timeout_us");
       },
       [](const Scenario& s) { return micros_text(s.wired.retransmit_timeout); }},
      {"chain_length", "certificates per peer",
       [](Scenario& s, N n, C) {
         set_shape(s, n, "chain_length", static_cast<unsigned>(read_u64(n, "chain_length")),
                   s.shape.cert_encoding_overhead(), s.shape.handshake_overhead());
       },
       [](const Scenario& s) { return fmt::format("{}", s.shape.chain_length()); }},
      {"cert_encoding_overhead", "bytes of encoding per certificate",
       [](Scenario& s, N n, C) {
         set_shape(s, n, "cert_encoding_overhead", s.shape.chain_length(),
                   read_u64(n, "cert_encoding_overhead"), s.shape.handshake_overhead());
       },
       [](const Scenario& s) { return fmt::format("{}", s.shape.cert_encoding_overhead()); }},
      {"handshake_overhead", "fixed bytes per handshake flight",
       [](Scenario& s, N n, C) {
         set_shape(s, n, "handshake_overhead", s.shape.chain_length(),
                   s.shape.cert_encoding_overhead(), read_u64(n, "handshake_overhead"));
       },
       [](const Scenario& s) { return fmt::format("{}", s.shape.handshake_overhead()); }},
      {"fragment_size", "EAP fragment size in bytes",
       [](Scenario& s, N n, C) { s.fragment_size = read_u64(n, "fragment_size"); },
       [](const Scenario& s) { return fmt::format("{}", s.fragment_size); }},
      {"round_trip_cap", "EAP round trips allowed before aborting",
       [](Scenario& s, N n, C) { s.handshake.round_trip_cap = read_u64(n, "round_trip_cap"); },
       [](const Scenario& s) { return fmt::format("{}", s.handshake.round_trip_cap); }},
      {"identity_response_bytes", "EAP-Response/Identity payload",
       [](Scenario& s, N n, C) {
         s.handshake.identity_response_bytes = read_u64(n, "identity_response_bytes");
       },
       [](const Scenario& s) { return fmt::format("{}", s.handshake.identity_response_bytes); }},
      {"eap_success_bytes", "EAP-Success payload",
       [](Scenario& s, N n, C) { s.handshake.eap_success_bytes = read_u64(n, "eap_success_bytes"); },
       [](const Scenario& s) { return fmt::format("{}", s.handshake.eap_success_bytes); }},
      {"ttls_inner_bytes", "EAP-TTLS inner authentication payload",
       [](Scenario& s, N n, C) { s.handshake.ttls_inner_bytes = read_u64(n, "ttls_inner_bytes"); },
       [](const Scenario& s) { return fmt::format("{}", s.handshake.ttls_inner_bytes); }},
      {"psk_extension_bytes", "resumed ClientHello bytes besides the key share",
       [](Scenario& s, N n, C) {
         s.handshake.psk_extension_bytes = read_u64(n, "psk_extension_bytes");
       },
       [](const Scenario& s) { return fmt::format("{}", s.handshake.psk_extension_bytes); }},
      {"resumed_server_overhead_bytes", "resumed server flight bytes besides the ciphertext",
       [](Scenario& s, N n, C) {
         s.handshake.resumed_server_overhead_bytes =
             read_u64(n, "resumed_server_overhead_bytes");
       },
       [](const Scenario& s) {
         return fmt::format("{}", s.handshake.resumed_server_overhead_bytes);
       }},
      {"client_cpu_hz", "client clock rate",
       [](Scenario& s, N n, C) { s.cpu.client_hz = read_double(n, "client_cpu_hz"); },
       [](const Scenario& s) { return fmt::format("{}", s.cpu.client_hz); }},
      {"ap_cpu_hz", "access point clock rate",
       [](Scenario& s, N n, C) { s.cpu.ap_hz = read_double(n, "ap_cpu_hz"); },
       [](const Scenario& s) { return fmt::format("{}", s.cpu.ap_hz); }},
      {"server_cpu_hz", "RADIUS server clock rate",
       [](Scenario& s, N n, C) { s.cpu.server_hz = read_double(n, "server_cpu_hz"); },
       [](const Scenario& s) { return fmt::format("{}", s.cpu.server_hz); }},
      {"ap_processing_us", "AP forwarding time per frame",
       [](Scenario& s, N n, C) { s.ap_processing = read_micros(n, "ap_processing_us"); },
       [](const Scenario& s) { return micros_text(s.ap_processing); }},
      {"resumption", "simulate an abbreviated (resumed) handshake",
       [](Scenario& s, N n, C) { s.resumption = read_bool(n, "resumption"); },
       [](const Scenario& s) { return std::string(s.resumption ? "true" : "false"); }},
      {"resumption_mode", "stateful | stateless",
       [](Scenario& s, N n, C) {
         const auto v = read_string(n, "resumption_mode");
         if (v == "stateful") {
           s.resumption_mode = ResumptionMode::Stateful;
         } else if (v == "stateless") {
           s.resumption_mode = ResumptionMode::Stateless;
         } else {
           fail(n, "resumption_mode", fmt::format("unknown mode '{}'", v));
         }
       },
       [](const Scenario& s) { return std::string(to_string(s.resumption_mode)); }},
      {"repetitions", "authentications per scenario",
       [](Scenario& s, N n, C) {
         s.repetitions = static_cast<unsigned>(read_u64(n, "repetitions"));
       },
       [](const Scenario& s) { return fmt::format("{}", s.repetitions); }},
      {"seed", "64-bit base seed (decimal or 0x hex)",
       [](Scenario& s, N n, C) { s.seed = read_u64(n, "seed"); },
       [](const Scenario& s) { return fmt::format("{:#x}", s.seed); }},
  };
  return table;
}

const KeySpec* find_key(const std::string& name) {
  for (const auto& k : key_table()) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

using Layer = std::map<std::string, YAML::Node>;

constexpr const char* kSections[] = {"registry", "bands", "situations", "scenarios", "matrix"};

bool is_section(const std::string& key) {
  for (const char* s : kSections) {
    if (key == s) return true;
  }
  return false;
}

Layer scenario_layer(const YAML::Node& map, bool allow_sections) {
  if (!map.IsMap()) throw ParseError("expected a mapping of scenario keys", line_of(map));
  Layer layer;
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (allow_sections && is_section(key)) continue;
    if (!find_key(key)) {
      throw ParseError(fmt::format("unknown key '{}'", key), line_of(kv.first), key);
    }
    layer.erase(key);
    layer.emplace(key, kv.second);
  }
  return layer;
}

Scenario build(const std::vector<const Layer*>& layers, const Context& ctx) {
  Scenario s;
  for (const auto& spec : key_table()) {
    const YAML::Node* value = nullptr;
    for (const Layer* layer : layers) {
      if (auto it = layer->find(spec.name); it != layer->end()) value = &it->second;
    }
    if (value) spec.apply(s, *value, ctx);
  }
  return s;
}

void apply_constants(ClassicalConstants& c, const YAML::Node& node) {
  if (!node.IsMap()) throw ParseError("registry: expected a mapping", line_of(node), "registry");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "rsa2048_public_key_bytes") {
      c.rsa2048_public_key_bytes = read_u64(v, key);
    } else if (key == "rsa2048_secret_key_bytes") {
      c.rsa2048_secret_key_bytes = read_u64(v, key);
    } else if (key == "ecdsa_sign_cycles") {
      c.ecdsa_sign_cycles = read_u64(v, key);
    } else if (key == "ecdsa_verify_cycles") {
      c.ecdsa_verify_cycles = read_u64(v, key);
    } else if (key == "x25519_share_bytes") {
      c.x25519_share_bytes = read_u64(v, key);
    } else if (key == "ecdh_cycles") {
      c.ecdh_cycles = read_u64(v, key);
    } else {
      throw ParseError(fmt::format("unknown key 'registry.{}'", key), line_of(kv.first), key);
    }
  }
}

void apply_bands(Context& ctx, const YAML::Node& node) {
  if (!node.IsMap()) throw ParseError("bands: expected a mapping", line_of(node), "bands");
  for (const auto& kv : node) {
    const std::string name = kv.first.as<std::string>();
    const auto band = parse_band(name);
    if (!band) throw ParseError(fmt::format("unknown band '{}'", name), line_of(kv.first), name);
    BandProfile& p = ctx.bands[*band];
    if (!kv.second.IsMap()) fail(kv.second, name, "expected a mapping");
    for (const auto& f : kv.second) {
      const std::string key = f.first.as<std::string>();
      if (key == "data_rate_bps") {
        p.data_rate_bps = read_double(f.second, key);
      } else if (key == "phy_mac_overhead_us") {
        p.phy_mac_overhead = read_micros(f.second, key);
      } else {
        throw ParseError(fmt::format("unknown key 'bands.{}.{}'", name, key), line_of(f.first),
                         key);
      }
    }
  }
}

void apply_situations(Context& ctx, const YAML::Node& node) {
  if (!node.IsMap()) {
    throw ParseError("situations: expected a mapping", line_of(node), "situations");
  }
  for (const auto& kv : node) {
    const std::string name = kv.first.as<std::string>();
    const auto sit = parse_situation(name);
    if (!sit) {
      throw ParseError(fmt::format("unknown situation '{}'", name), line_of(kv.first), name);
    }
    SignalSituation& p = ctx.situations[*sit];
    if (!kv.second.IsMap()) fail(kv.second, name, "expected a mapping");
    for (const auto& f : kv.second) {
      const std::string key = f.first.as<std::string>();
      if (key == "frame_loss_probability") {
        p.frame_loss_probability = read_double(f.second, key);
      } else if (key == "retry_backoff_us") {
        p.retry_backoff = read_micros(f.second, key);
      } else {
        throw ParseError(fmt::format("unknown key 'situations.{}.{}'", name, key),
                         line_of(f.first), key);
      }
    }
  }
}

// Cartesian expansion, outermost first.
constexpr std::pair<const char*, const char*> kMatrixAxes[] = {
    {"signatures", "signature"}, {"methods", "method"},     {"kems", "kem"},
    {"resumption", "resumption"}, {"situations", "situation"}, {"bands", "band"},
};

std::vector<Scenario> expand_matrix(const YAML::Node& node, const Layer& base,
                                    const Context& ctx) {
  if (!node.IsMap()) throw ParseError("matrix: expected a mapping", line_of(node), "matrix");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    bool known = false;
    for (const auto& axis : kMatrixAxes) known |= key == axis.first;
    if (!known) {
      throw ParseError(fmt::format("unknown key 'matrix.{}'", key), line_of(kv.first), key);
    }
    if (!kv.second.IsSequence() || kv.second.size() == 0) {
      fail(kv.second, key, "expected a non-empty list");
    }
  }

  std::vector<Layer> combos{Layer{}};
  for (const auto& [axis, field] : kMatrixAxes) {
    const YAML::Node values = node[axis];
    if (!values) continue;
    std::vector<Layer> next;
    for (const auto& combo : combos) {
      for (const auto& v : values) {
        Layer l = combo;
        l.insert_or_assign(field, YAML::Node(static_cast<const YAML::Node&>(v)));
        next.push_back(std::move(l));
      }
    }
    combos = std::move(next);
  }

  std::vector<Scenario> out;
  for (const auto& combo : combos) {
    Scenario s = build({&base, &combo}, ctx);
    if (combo.count("signature") || !base.count("id")) s.id.clear();
    out.push_back(std::move(s));
  }
  return out;
}

void finish(Scenario& s, const Registry& registry) {
  if (s.signature.empty()) throw ParseError("scenario has no signature", 0, "signature");
  if (s.id.empty()) s.id = default_scenario_id(s);
  try {
    validate(s, registry);
  } catch (const UnknownAlgorithm&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(fmt::format("scenario '{}': {}", s.id, e.what()));
  }
}

// `key = value` lines are accepted as shorthand for `key: value`. Line
// numbers are preserved.
std::string normalize_assignments(const std::string& text) {
  static const std::regex assignment(R"(^(\s*(?:- )?[A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$)");
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line)) {
    out += std::regex_replace(line, assignment, "$1: $2");
    out += '\n';
  }
  return out;
}

}  // namespace

ScenarioSet parse_scenario_text(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(normalize_assignments(text));
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.is_null() ? 0 : e.mark.line + 1);
  }
  if (!root.IsMap()) throw ParseError("scenario file must be a mapping", line_of(root));

  ScenarioSet set;
  Context ctx;
  if (root["registry"]) apply_constants(set.constants, root["registry"]);
  if (root["bands"]) apply_bands(ctx, root["bands"]);
  if (root["situations"]) apply_situations(ctx, root["situations"]);

  const Layer base = scenario_layer(root, true);

  if (const YAML::Node list = root["scenarios"]) {
    if (!list.IsSequence()) fail(list, "scenarios", "expected a list");
    for (const auto& entry : list) {
      const Layer layer = scenario_layer(entry, false);
      set.scenarios.push_back(build({&base, &layer}, ctx));
    }
  }
  if (const YAML::Node matrix = root["matrix"]) {
    auto expanded = expand_matrix(matrix, base, ctx);
    set.scenarios.insert(set.scenarios.end(), expanded.begin(), expanded.end());
  }
  if (!root["scenarios"] && !root["matrix"]) set.scenarios.push_back(build({&base}, ctx));

  const Registry registry(set.constants);
  for (auto& s : set.scenarios) finish(s, registry);
  return set;
}

ScenarioSet parse_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::vector<Scenario> parse_scenario(const std::filesystem::path& path) {
  return parse_scenario_file(path).scenarios;
}

std::string emit_scenario_file(const ScenarioSet& set) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  const ClassicalConstants& c = set.constants;
  out << YAML::Key << "registry" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "rsa2048_public_key_bytes" << YAML::Value << c.rsa2048_public_key_bytes;
  out << YAML::Key << "rsa2048_secret_key_bytes" << YAML::Value << c.rsa2048_secret_key_bytes;
  out << YAML::Key << "ecdsa_sign_cycles" << YAML::Value << c.ecdsa_sign_cycles;
  out << YAML::Key << "ecdsa_verify_cycles" << YAML::Value << c.ecdsa_verify_cycles;
  out << YAML::Key << "x25519_share_bytes" << YAML::Value << c.x25519_share_bytes;
  out << YAML::Key << "ecdh_cycles" << YAML::Value << c.ecdh_cycles;
  out << YAML::EndMap;

  out << YAML::Key << "scenarios" << YAML::Value << YAML::BeginSeq;
  for (const auto& s : set.scenarios) {
    out << YAML::BeginMap;
    for (const auto& spec : key_table()) {
      out << YAML::Key << spec.name << YAML::Value << YAML::DoubleQuoted << spec.value(s);
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string scenario_reference() {
  Scenario defaults;
  defaults.signature = "(required)";
  std::string out = "Scenario keys (top level, `scenarios:` entries):\n";
  for (const auto& spec : key_table()) {
    out += fmt::format("  {:<30} default {:<14} {}\n", spec.name,
                       spec.value(defaults).empty() ? "-" : spec.value(defaults), spec.help);
  }
  out += R"(
Sections:
  registry:    rsa2048_public_key_bytes, rsa2048_secret_key_bytes, ecdsa_sign_cycles,
               ecdsa_verify_cycles, x25519_share_bytes, ecdh_cycles
  bands:       <2.4GHz|5GHz>: {data_rate_bps, phy_mac_overhead_us}
  situations:  <excellent|good|very-weak>: {frame_loss_probability, retry_backoff_us}
  scenarios:   list of scenario-key mappings layered over the top level
  matrix:      lists for signatures, methods, kems, resumption, situations, bands;
               expanded as a cartesian product in that order
)";
  out += "\nSituation defaults:\n";
  for (auto sit : {Situation::Excellent, Situation::Good, Situation::VeryWeak}) {
    const auto d = SignalSituation::defaults(sit);
    out += fmt::format("  {:<10} loss {:<6} retry_backoff_us {}\n", to_string(sit),
                       d.frame_loss_probability, to_micros(d.retry_backoff));
  }
  out += "Band defaults:\n";
  for (auto band : {Band::Band2_4GHz, Band::Band5GHz}) {
    const auto d = BandProfile::defaults(band);
    out += fmt::format("  {:<10} data_rate_bps {:<10} phy_mac_overhead_us {}\n", to_string(band),
                       d.data_rate_bps, to_micros(d.phy_mac_overhead));
  }
  return out;
}

}  // namespace pqwpa
