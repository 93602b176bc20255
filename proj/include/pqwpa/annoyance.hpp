#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pqwpa/algo_registry.hpp"

namespace pqwpa {

enum class AttackTarget { ClientCertificate, ServerCertificate, KeyShareSessionKey };

inline constexpr std::array<AttackTarget, 3> kAttackTargets = {
    AttackTarget::ClientCertificate, AttackTarget::ServerCertificate,
    AttackTarget::KeyShareSessionKey};

// Ordinal only. Low means few quantum computations buy a lot of damage.
enum class AnnoyanceLevel { Low, Medium, High };

struct Impact {
  bool confidentiality = false;
  bool integrity = false;
  bool availability = false;
  friend bool operator==(const Impact&, const Impact&) = default;
};

struct AnnoyanceRating {
  AttackTarget target;
  AnnoyanceLevel level;
  Impact impact;
  friend bool operator==(const AnnoyanceRating&, const AnnoyanceRating&) = default;
};

std::string_view to_string(AttackTarget target);
std::string_view to_string(AnnoyanceLevel level);
// "CIA" letters for the flagged impacts, "-" for none.
std::string impact_letters(const Impact& impact);

AnnoyanceRating rate_target(AttackTarget target);

enum class Exposure { Exposed, Protected };

struct TargetFinding {
  AttackTarget target;
  Exposure exposure;
  AnnoyanceRating rating;
  // Scheme that protects the target.
  std::string protecting_scheme;
  // Recorded traffic can be decrypted later once the key exchange falls.
  bool harvest_now_decrypt_later = false;
};

// Exposed targets first, most urgent (lowest annoyance) first; protected
// targets after, in declaration order.
struct DeploymentAudit {
  std::vector<TargetFinding> findings;
  bool fully_protected() const;
};

DeploymentAudit evaluate_deployment(const SignatureSpec& client_sig,
                                    const SignatureSpec& server_sig, const KemSpec& kem);

// Resolves names through the registry; throws UnknownAlgorithm.
DeploymentAudit evaluate_deployment(std::string_view client_sig, std::string_view server_sig,
                                    std::string_view kem,
                                    const Registry& registry = Registry::standard());

std::string audit_to_json(const DeploymentAudit& audit);
std::string audit_to_table(const DeploymentAudit& audit);

}  // namespace pqwpa
