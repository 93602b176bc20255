#pragma once

#include <string>
#include <vector>

#include "pqwpa/algo_registry.hpp"
#include "pqwpa/handshake.hpp"

namespace pqwpa {

// Logical EAP messages must stay strictly below this.
inline constexpr std::size_t kRecommendedMessageLimit = 100;

struct RecommendationVerdict {
  std::string algorithm;
  std::string kem;
  std::size_t eap_messages = 0;
  // Every asymmetric operation run by client and server in one full handshake.
  Cycles total_handshake_cycles = 0;
  // Same quantity for RSA-2048 with X25519 under the same method and shape.
  Cycles baseline_cycles = 0;
  bool recommended = false;
  std::vector<std::string> reasons;
};

RecommendationVerdict classify_recommended(const SignatureSpec& sig, const KemSpec& kem,
                                           EapMethod method, const ChainShape& shape,
                                           Bytes fragment_size,
                                           const Registry& registry = Registry::standard(),
                                           const HandshakeParams& params = {});

std::string verdicts_to_csv(const std::vector<RecommendationVerdict>& verdicts);
std::string verdicts_to_json(const std::vector<RecommendationVerdict>& verdicts);

}  // namespace pqwpa
