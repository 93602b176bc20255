#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqwpa/units.hpp"

namespace pqwpa {

// NIST PQ security category. Classical marks schemes with no PQ security.
enum class SecurityLevel { L1, L2, L3, L5, Classical };

std::string_view to_string(SecurityLevel level);
std::optional<SecurityLevel> parse_security_level(std::string_view text);

struct SignatureSpec {
  std::string name;
  std::string problem_type;
  Bytes public_key_bytes = 0;
  Bytes secret_key_bytes = 0;
  Bytes signature_bytes = 0;
  Cycles sign_cycles = 0;
  Cycles verify_cycles = 0;
  SecurityLevel level = SecurityLevel::Classical;

  bool is_classical() const { return level == SecurityLevel::Classical; }
  bool is_hybrid() const { return name.find('+') != std::string::npos; }
  friend bool operator==(const SignatureSpec&, const SignatureSpec&) = default;
};

// Classical key agreement is represented as a KEM whose "ciphertext" is the
// responder's key share.
struct KemSpec {
  std::string name;
  std::string problem_type;
  Bytes public_key_bytes = 0;
  Bytes secret_key_bytes = 0;
  Bytes ciphertext_bytes = 0;
  Cycles keygen_cycles = 0;
  Cycles encaps_cycles = 0;
  Cycles decaps_cycles = 0;
  SecurityLevel level = SecurityLevel::Classical;

  bool is_classical() const { return level == SecurityLevel::Classical; }
  bool is_hybrid() const { return name.find('+') != std::string::npos || hybrid_alias; }
  friend bool operator==(const KemSpec&, const KemSpec&) = default;

  // Set for pre-registered hybrids that carry a single-token name
  // (X25519MLKEM768 and friends).
  bool hybrid_alias = false;
};

// Classical figures with no exact published value. All are overridable.
struct ClassicalConstants {
  Bytes rsa2048_public_key_bytes = 270;
  Bytes rsa2048_secret_key_bytes = 1192;
  // ECDSA-p256 figures; p384 scales x2 and p521 x4.
  Cycles ecdsa_sign_cycles = 300'000;
  Cycles ecdsa_verify_cycles = 900'000;
  Bytes x25519_share_bytes = 64;
  // X25519 work per side; secp384r1 scales x2.
  Cycles ecdh_cycles = 100'000;

  friend bool operator==(const ClassicalConstants&, const ClassicalConstants&) = default;
};

// Lower-cased alphanumeric form used for lookups. "+" is kept as the hybrid
// separator and the SLH-DSA hash tag is dropped, so "slh-dsa-sha2-128f",
// "SLH-DSA-128f" and "SLH_DSA_SHA2_128F" all collapse to the same key.
std::string canonical_name(std::string_view name);

SignatureSpec make_hybrid_signature(const SignatureSpec& classical,
                                    const SignatureSpec& pq);
KemSpec make_hybrid_kem(const KemSpec& classical, const KemSpec& pq);

// Immutable table of scheme parameters. Safe for concurrent reads.
class Registry {
 public:
  explicit Registry(ClassicalConstants constants = {});

  // Registry built from default constants.
  static const Registry& standard();

  const ClassicalConstants& constants() const { return constants_; }

  // Exact registered records. Throw UnknownAlgorithm.
  const SignatureSpec& lookup_signature(std::string_view name) const;
  const KemSpec& lookup_kem(std::string_view name) const;

  // Like lookup_*, but also accepts "classical+pq" and builds the hybrid.
  SignatureSpec resolve_signature(std::string_view name) const;
  KemSpec resolve_kem(std::string_view name) const;

  // L1 and L2 -> ML-KEM-512, L3 -> ML-KEM-768, L5 -> ML-KEM-1024.
  const KemSpec& kem_for_level(SecurityLevel level) const;
  // X25519MLKEM512 / X25519MLKEM768 / SecP384r1MLKEM1024.
  const KemSpec& hybrid_kem_for_level(SecurityLevel level) const;
  // ECDSA curve paired with a PQ level in hybrid certificates.
  const SignatureSpec& ecdsa_for_level(SecurityLevel level) const;

  const std::vector<SignatureSpec>& signatures() const { return signatures_; }
  const std::vector<KemSpec>& kems() const { return kems_; }

  // Names of the twelve certificate algorithms of the evaluation, RSA first.
  static const std::vector<std::string>& evaluated_signatures();

  // One row per scheme, signature rows first, in registration order.
  std::string export_csv() const;

 private:
  ClassicalConstants constants_;
  std::vector<SignatureSpec> signatures_;
  std::vector<KemSpec> kems_;
};

}  // namespace pqwpa
