#include "pqwpa/algo_registry.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "csv.hpp"
#include "pqwpa/errors.hpp"

namespace pqwpa {

namespace {

using L = SecurityLevel;

struct NamedHybrid {
  const char* name;
  const char* classical;
  const char* pq;
};

constexpr NamedHybrid kNamedHybridKems[] = {
    {"X25519MLKEM512", "X25519", "ML-KEM-512"},
    {"X25519MLKEM768", "X25519", "ML-KEM-768"},
    {"SecP384r1MLKEM1024", "SecP384r1", "ML-KEM-1024"},
};

std::vector<SignatureSpec> signature_table(const ClassicalConstants& c) {
  std::vector<SignatureSpec> t = {
      {"RSA-2048", "Integer factorization", c.rsa2048_public_key_bytes,
       c.rsa2048_secret_key_bytes, 256, 27'000'000, 45'000, L::Classical},
      {"Falcon-512", "NTRU SIS", 897, 1281, 666, 1'009'764, 81'036, L::L1},
      // Printed as "205 308 0" in the source table; read as 2 053 080, about
      // twice Falcon-512.
      {"Falcon-1024", "NTRU SIS", 1793, 2305, 1280, 2'053'080, 160'596, L::L5},
      {"ML-DSA-44", "Module LWE / SIS", 1312, 2560, 2420, 333'013, 118'412, L::L2},
      {"ML-DSA-65", "Module LWE / SIS", 1952, 4032, 3309, 529'106, 179'424, L::L3},
      {"ML-DSA-87", "Module LWE / SIS", 2592, 4896, 4627, 642'192, 279'936, L::L5},
      {"SLH-DSA-SHA2-128f", "Hash functions", 32, 64, 17'088, 33'651'546, 2'150'290, L::L1},
      {"SLH-DSA-SHA2-192f", "Hash functions", 48, 96, 35'664, 55'320'742, 3'492'210, L::L3},
      {"SLH-DSA-SHA2-256f", "Hash functions", 64, 128, 49'856, 109'104'452, 3'559'052, L::L5},
      {"SLH-DSA-SHA2-128s", "Hash functions", 32, 64, 7'856, 644'740'090, 861'478, L::L1},
      {"SLH-DSA-SHA2-192s", "Hash functions", 48, 96, 16'224, 1'246'378'060, 1'444'030, L::L3},
      {"SLH-DSA-SHA2-256s", "Hash functions", 64, 128, 29'792, 1'025'721'040, 1'986'974, L::L5},
  };
  // Uncompressed points and maximum-length DER signatures.
  const char* ec = "Elliptic curve discrete logarithm";
  t.push_back({"ECDSA-p256", ec, 65, 32, 72, c.ecdsa_sign_cycles,
               c.ecdsa_verify_cycles, L::Classical});
  t.push_back({"ECDSA-p384", ec, 97, 48, 104, 2 * c.ecdsa_sign_cycles,
               2 * c.ecdsa_verify_cycles, L::Classical});
  t.push_back({"ECDSA-p521", ec, 133, 66, 139, 4 * c.ecdsa_sign_cycles,
               4 * c.ecdsa_verify_cycles, L::Classical});
  return t;
}

std::vector<KemSpec> kem_table(const ClassicalConstants& c) {
  std::vector<KemSpec> t = {
      {"X25519", "Discrete logarithm", c.x25519_share_bytes, 32, c.x25519_share_bytes,
       c.ecdh_cycles, c.ecdh_cycles, c.ecdh_cycles, L::Classical},
      {"ML-KEM-512", "Module LWE", 800, 1632, 768, 122'684, 154'524, 187'960, L::L1},
      {"ML-KEM-768", "Module LWE", 1184, 2400, 1088, 199'408, 235'260, 274'900, L::L3},
      {"ML-KEM-1024", "Module LWE", 1568, 3168, 1568, 307'148, 346'648, 396'584, L::L5},
      {"SecP384r1", "Elliptic curve discrete logarithm", 97, 48, 97, 2 * c.ecdh_cycles,
       2 * c.ecdh_cycles, 2 * c.ecdh_cycles, L::Classical},
  };
  auto find = [&t](std::string_view n) -> const KemSpec& {
    return *std::find_if(t.begin(), t.end(), [n](const KemSpec& k) { return k.name == n; });
  };
  for (const auto& named : kNamedHybridKems) {
    KemSpec h = make_hybrid_kem(find(named.classical), find(named.pq));
    h.name = named.name;
    h.hybrid_alias = true;
    t.push_back(std::move(h));
  }
  return t;
}

template <class Spec>
const Spec* find_by_name(const std::vector<Spec>& table, std::string_view name) {
  const std::string key = canonical_name(name);
  for (const auto& s : table) {
    if (canonical_name(s.name) == key) return &s;
  }
  return nullptr;
}

std::pair<std::string_view, std::string_view> split_hybrid(std::string_view name) {
  const auto plus = name.find('+');
  if (plus == std::string_view::npos) return {name, {}};
  return {name.substr(0, plus), name.substr(plus + 1)};
}

}  // namespace

std::string_view to_string(SecurityLevel level) {
  switch (level) {
    case L::L1: return "L1";
    case L::L2: return "L2";
    case L::L3: return "L3";
    case L::L5: return "L5";
    case L::Classical: return "Classical";
  }
  return "?";
}

std::optional<SecurityLevel> parse_security_level(std::string_view text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "l1" || t == "1") return L::L1;
  if (t == "l2" || t == "2") return L::L2;
  if (t == "l3" || t == "3") return L::L3;
  if (t == "l5" || t == "5") return L::L5;
  if (t == "classical" || t == "-") return L::Classical;
  return std::nullopt;
}

std::string canonical_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char ch : name) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) {
      out += static_cast<char>(std::tolower(u));
    } else if (ch == '+') {
      out += '+';
    }
  }
  // SHA-2 is the only hash family registered, so the tag is optional.
  std::string::size_type pos = 0;
  while ((pos = out.find("slhdsasha2", pos)) != std::string::npos) {
    out.erase(pos + 6, 4);
    pos += 6;
  }
  // Spellings of the classical key exchange used in the source material.
  for (const char* alias : {"ecdhkewithx25519", "ecdhex25519", "ecdhx25519"}) {
    if (out == alias) return "x25519";
  }
  return out;
}

SignatureSpec make_hybrid_signature(const SignatureSpec& classical, const SignatureSpec& pq) {
  if (!classical.is_classical() || pq.is_classical()) {
    throw InvalidHybrid(fmt::format("hybrid signature needs one classical and one PQ "
                                    "component, got {} and {}",
                                    classical.name, pq.name));
  }
  SignatureSpec h;
  h.name = classical.name + "+" + pq.name;
  h.problem_type = classical.problem_type + " / " + pq.problem_type;
  h.public_key_bytes = classical.public_key_bytes + pq.public_key_bytes;
  h.secret_key_bytes = classical.secret_key_bytes + pq.secret_key_bytes;
  h.signature_bytes = classical.signature_bytes + pq.signature_bytes;
  h.sign_cycles = classical.sign_cycles + pq.sign_cycles;
  h.verify_cycles = classical.verify_cycles + pq.verify_cycles;
  h.level = pq.level;
  return h;
}

KemSpec make_hybrid_kem(const KemSpec& classical, const KemSpec& pq) {
  if (!classical.is_classical() || pq.is_classical()) {
    throw InvalidHybrid(fmt::format("hybrid KEM needs one classical and one PQ "
                                    "component, got {} and {}",
                                    classical.name, pq.name));
  }
  KemSpec h;
  h.name = classical.name + "+" + pq.name;
  h.problem_type = classical.problem_type + " / " + pq.problem_type;
  h.public_key_bytes = classical.public_key_bytes + pq.public_key_bytes;
  h.secret_key_bytes = classical.secret_key_bytes + pq.secret_key_bytes;
  h.ciphertext_bytes = classical.ciphertext_bytes + pq.ciphertext_bytes;
  h.keygen_cycles = classical.keygen_cycles + pq.keygen_cycles;
  h.encaps_cycles = classical.encaps_cycles + pq.encaps_cycles;
  h.decaps_cycles = classical.decaps_cycles + pq.decaps_cycles;
  h.level = pq.level;
  return h;
}

Registry::Registry(ClassicalConstants constants)
    : constants_(constants),
      signatures_(signature_table(constants_)),
      kems_(kem_table(constants_)) {}

const Registry& Registry::standard() {
  static const Registry registry;
  return registry;
}

const SignatureSpec& Registry::lookup_signature(std::string_view name) const {
  if (const auto* s = find_by_name(signatures_, name)) return *s;
  throw UnknownAlgorithm(std::string(name));
}

const KemSpec& Registry::lookup_kem(std::string_view name) const {
  if (const auto* k = find_by_name(kems_, name)) return *k;
  throw UnknownAlgorithm(std::string(name));
}

SignatureSpec Registry::resolve_signature(std::string_view name) const {
  const auto [first, second] = split_hybrid(name);
  if (second.empty()) return lookup_signature(first);
  return make_hybrid_signature(lookup_signature(first), lookup_signature(second));
}

KemSpec Registry::resolve_kem(std::string_view name) const {
  const auto [first, second] = split_hybrid(name);
  if (second.empty()) return lookup_kem(first);
  const KemSpec& classical = lookup_kem(first);
  const KemSpec& pq = lookup_kem(second);
  // Prefer the registered name when the pair is one of the named hybrids.
  for (const auto& named : kNamedHybridKems) {
    if (canonical_name(named.classical) == canonical_name(classical.name) &&
        canonical_name(named.pq) == canonical_name(pq.name)) {
      return lookup_kem(named.name);
    }
  }
  return make_hybrid_kem(classical, pq);
}

const KemSpec& Registry::kem_for_level(SecurityLevel level) const {
  switch (level) {
    case L::L1:
    case L::L2: return lookup_kem("ML-KEM-512");
    case L::L3: return lookup_kem("ML-KEM-768");
    case L::L5: return lookup_kem("ML-KEM-1024");
    case L::Classical: break;
  }
  throw NoMatchingKem("classical configurations use ECDH, not a KEM");
}

const KemSpec& Registry::hybrid_kem_for_level(SecurityLevel level) const {
  switch (level) {
    case L::L1:
    case L::L2: return lookup_kem("X25519MLKEM512");
    case L::L3: return lookup_kem("X25519MLKEM768");
    case L::L5: return lookup_kem("SecP384r1MLKEM1024");
    case L::Classical: break;
  }
  throw NoMatchingKem("no hybrid KEM for a classical level");
}

const SignatureSpec& Registry::ecdsa_for_level(SecurityLevel level) const {
  switch (level) {
    case L::L1:
    case L::L2: return lookup_signature("ECDSA-p256");
    case L::L3: return lookup_signature("ECDSA-p384");
    case L::L5: return lookup_signature("ECDSA-p521");
    case L::Classical: break;
  }
  throw InvalidHybrid("no ECDSA curve for a classical level");
}

const std::vector<std::string>& Registry::evaluated_signatures() {
  static const std::vector<std::string> names = {
      "RSA-2048",          "Falcon-512",        "ML-DSA-44",         "SLH-DSA-SHA2-128f",
      "SLH-DSA-SHA2-128s", "ML-DSA-65",         "SLH-DSA-SHA2-192f", "SLH-DSA-SHA2-192s",
      "Falcon-1024",       "ML-DSA-87",         "SLH-DSA-SHA2-256f", "SLH-DSA-SHA2-256s",
  };
  return names;
}

std::string Registry::export_csv() const {
  std::string out =
      "kind,name,problem_type,level,public_key_bytes,secret_key_bytes,signature_bytes,"
      "ciphertext_bytes,sign_cycles,verify_cycles,keygen_cycles,encaps_cycles,"
      "decaps_cycles\n";
  using detail::csv_field;
  for (const auto& s : signatures_) {
    out += fmt::format("signature,{},{},{},{},{},{},,{},{},,,\n", csv_field(s.name),
                       csv_field(s.problem_type), to_string(s.level), s.public_key_bytes,
                       s.secret_key_bytes, s.signature_bytes, s.sign_cycles, s.verify_cycles);
  }
  for (const auto& k : kems_) {
    out += fmt::format("kem,{},{},{},{},{},,{},,,{},{},{}\n", csv_field(k.name),
                       csv_field(k.problem_type), to_string(k.level), k.public_key_bytes,
                       k.secret_key_bytes, k.ciphertext_bytes, k.keygen_cycles,
                       k.encaps_cycles, k.decaps_cycles);
  }
  return out;
}

}  // namespace pqwpa
