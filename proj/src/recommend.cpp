#include "pqwpa/recommend.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include "csv.hpp"

namespace pqwpa {

RecommendationVerdict classify_recommended(const SignatureSpec& sig, const KemSpec& kem,
                                           EapMethod method, const ChainShape& shape,
                                           Bytes fragment_size, const Registry& registry,
                                           const HandshakeParams& params) {
  const auto flights = build_flights(method, sig, kem, shape, params);
  const auto baseline = build_flights(method, registry.lookup_signature("RSA-2048"),
                                      registry.lookup_kem("X25519"), shape, params);

  RecommendationVerdict v;
  v.algorithm = sig.name;
  v.kem = kem.name;
  v.eap_messages = count_eap_messages(flights, fragment_size);
  v.total_handshake_cycles = total_crypto_cycles(flights);
  v.baseline_cycles = total_crypto_cycles(baseline);

  const bool few_messages = v.eap_messages < kRecommendedMessageLimit;
  const bool cheap = v.total_handshake_cycles <= v.baseline_cycles;
  if (!few_messages) {
    v.reasons.push_back(fmt::format("message count {} >= {}", v.eap_messages,
                                    kRecommendedMessageLimit));
  }
  if (!cheap) {
    v.reasons.push_back(fmt::format("cycle total {} exceeds RSA baseline {}",
                                    v.total_handshake_cycles, v.baseline_cycles));
  }
  v.recommended = few_messages && cheap;
  return v;
}

std::string verdicts_to_csv(const std::vector<RecommendationVerdict>& verdicts) {
  std::string out =
      "algorithm,kem,eap_messages,total_handshake_cycles,baseline_cycles,recommended,reasons\n";
  for (const auto& v : verdicts) {
    std::string reasons;
    for (const auto& r : v.reasons) reasons += (reasons.empty() ? "" : "; ") + r;
    out += fmt::format("{},{},{},{},{},{},{}\n", detail::csv_field(v.algorithm),
                       detail::csv_field(v.kem), v.eap_messages,
                       v.total_handshake_cycles, v.baseline_cycles,
                       v.recommended ? "true" : "false", detail::csv_field(reasons));
  }
  return out;
}

std::string verdicts_to_json(const std::vector<RecommendationVerdict>& verdicts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json j;
    j["algorithm"] = v.algorithm;
    j["kem"] = v.kem;
    j["eap_messages"] = v.eap_messages;
    j["total_handshake_cycles"] = v.total_handshake_cycles;
    j["baseline_cycles"] = v.baseline_cycles;
    j["recommended"] = v.recommended;
    j["reasons"] = v.reasons;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace pqwpa
