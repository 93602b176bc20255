#include "pqwpa/handshake.hpp"

#include <fmt/format.h>

#include "pqwpa/errors.hpp"

namespace pqwpa {

std::string_view to_string(EapMethod method) {
  return method == EapMethod::EapTls ? "EAP-TLS" : "EAP-TTLS";
}

std::string_view to_string(FlightLabel label) {
  switch (label) {
    case FlightLabel::IdentityRequest: return "IdentityRequest";
    case FlightLabel::IdentityResponse: return "IdentityResponse";
    case FlightLabel::TlsStart: return "TlsStart";
    case FlightLabel::ClientHello: return "ClientHello";
    case FlightLabel::ServerFlight: return "ServerFlight";
    case FlightLabel::ClientFlight: return "ClientFlight";
    case FlightLabel::ServerFinish: return "ServerFinish";
  }
  return "?";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::ClientToServer ? "ClientToServer" : "ServerToClient";
}

std::string_view to_string(Entity entity) {
  switch (entity) {
    case Entity::Client: return "client";
    case Entity::AccessPoint: return "ap";
    case Entity::Server: return "server";
  }
  return "?";
}

std::string_view to_string(CryptoOpKind kind) {
  switch (kind) {
    case CryptoOpKind::KeyGen: return "keygen";
    case CryptoOpKind::Encaps: return "encaps";
    case CryptoOpKind::Decaps: return "decaps";
    case CryptoOpKind::Sign: return "sign";
    case CryptoOpKind::Verify: return "verify";
  }
  return "?";
}

std::string_view to_string(ResumptionMode mode) {
  return mode == ResumptionMode::Stateful ? "stateful" : "stateless";
}

ChainShape::ChainShape(unsigned chain_length, Bytes cert_encoding_overhead,
                       Bytes handshake_overhead)
    : chain_length_(chain_length),
      cert_encoding_overhead_(cert_encoding_overhead),
      handshake_overhead_(handshake_overhead) {
  if (chain_length_ < 1) throw InvalidArgument("chain_length must be at least 1");
}

Bytes certificate_chain_bytes(const SignatureSpec& sig, const ChainShape& shape) {
  // Each certificate holds one subject key and one issuer signature.
  return shape.chain_length() *
         (shape.cert_encoding_overhead() + sig.public_key_bytes + sig.signature_bytes);
}

namespace {

constexpr auto kC2S = Direction::ClientToServer;
constexpr auto kS2C = Direction::ServerToClient;

// The chain's certificates plus the CertificateVerify signature.
void add_verifies(std::vector<CryptoOp>& ops, Entity at, const SignatureSpec& sig,
                  const ChainShape& shape) {
  for (unsigned i = 0; i < shape.chain_length() + 1; ++i) {
    ops.push_back({at, CryptoOpKind::Verify, sig.verify_cycles});
  }
}

}  // namespace

std::vector<Flight> build_flights(EapMethod method, const SignatureSpec& sig,
                                  const KemSpec& kem, const ChainShape& shape,
                                  const HandshakeParams& params) {
  if (kem.is_classical() && !sig.is_classical()) {
    throw IncompatibleConfig(fmt::format(
        "{} certificates need a PQ or hybrid key exchange, got {}", sig.name, kem.name));
  }
  const Bytes overhead = shape.handshake_overhead();
  const Bytes chain = certificate_chain_bytes(sig, shape);

  std::vector<Flight> flights;
  flights.push_back({FlightLabel::IdentityRequest, kS2C, params.identity_request_bytes, {}});
  flights.push_back({FlightLabel::IdentityResponse, kC2S, params.identity_response_bytes, {}});
  flights.push_back({FlightLabel::TlsStart, kS2C, 0, {}});
  flights.push_back({FlightLabel::ClientHello,
                     kC2S,
                     kem.public_key_bytes + overhead,
                     {{Entity::Client, CryptoOpKind::KeyGen, kem.keygen_cycles}}});

  Flight server{FlightLabel::ServerFlight, kS2C,
                kem.ciphertext_bytes + chain + sig.signature_bytes + overhead, {}};
  server.crypto_ops.push_back({Entity::Server, CryptoOpKind::Encaps, kem.encaps_cycles});
  server.crypto_ops.push_back({Entity::Server, CryptoOpKind::Sign, sig.sign_cycles});
  server.crypto_ops.push_back({Entity::Client, CryptoOpKind::Decaps, kem.decaps_cycles});
  add_verifies(server.crypto_ops, Entity::Client, sig, shape);
  flights.push_back(std::move(server));

  if (method == EapMethod::EapTls) {
    Flight client{FlightLabel::ClientFlight, kC2S, chain + sig.signature_bytes + overhead, {}};
    client.crypto_ops.push_back({Entity::Client, CryptoOpKind::Sign, sig.sign_cycles});
    add_verifies(client.crypto_ops, Entity::Server, sig, shape);
    flights.push_back(std::move(client));
  } else {
    flights.push_back({FlightLabel::ClientFlight, kC2S, params.ttls_inner_bytes, {}});
  }

  flights.push_back({FlightLabel::ServerFinish, kS2C, params.eap_success_bytes, {}});
  return flights;
}

std::size_t fragment_count(Bytes payload_bytes, Bytes fragment_size) {
  if (fragment_size == 0) throw InvalidArgument("fragment_size must be positive");
  if (payload_bytes == 0) return 1;
  return static_cast<std::size_t>((payload_bytes + fragment_size - 1) / fragment_size);
}

std::vector<Fragment> fragment_flight(const Flight& flight, Bytes fragment_size) {
  const std::size_t n = fragment_count(flight.payload_bytes, fragment_size);
  std::vector<Fragment> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Bytes offset = i * fragment_size;
    const Bytes left = flight.payload_bytes - offset;
    out.push_back({flight.label, i, left < fragment_size ? left : fragment_size});
  }
  return out;
}

std::size_t count_round_trips(std::span<const Flight> flights, Bytes fragment_size) {
  std::size_t n = 0;
  for (const auto& f : flights) n += fragment_count(f.payload_bytes, fragment_size);
  return n;
}

std::size_t count_eap_messages(std::span<const Flight> flights, Bytes fragment_size) {
  return 2 * count_round_trips(flights, fragment_size);
}

void check_round_trip_cap(std::span<const Flight> flights, Bytes fragment_size,
                          std::size_t cap) {
  const std::size_t n = count_round_trips(flights, fragment_size);
  if (n > cap) throw RoundTripLimitExceeded(n, cap);
}

Bytes total_payload_bytes(std::span<const Flight> flights) {
  Bytes total = 0;
  for (const auto& f : flights) total += f.payload_bytes;
  return total;
}

Cycles total_crypto_cycles(std::span<const Flight> flights) {
  Cycles total = 0;
  for (const auto& f : flights) {
    for (const auto& op : f.crypto_ops) total += op.cycles;
  }
  return total;
}

std::vector<Flight> resumption_flights(const SignatureSpec& sig, const KemSpec& kem,
                                       const HandshakeParams& params, ResumptionMode mode) {
  Bytes hello = kem.public_key_bytes + params.psk_extension_bytes;
  if (mode == ResumptionMode::Stateless) hello += session_cache_entry_bytes(sig);

  std::vector<Flight> flights;
  flights.push_back({FlightLabel::IdentityRequest, kS2C, params.identity_request_bytes, {}});
  flights.push_back({FlightLabel::IdentityResponse, kC2S, params.identity_response_bytes, {}});
  flights.push_back({FlightLabel::ClientHello,
                     kC2S,
                     hello,
                     {{Entity::Client, CryptoOpKind::KeyGen, kem.keygen_cycles}}});
  flights.push_back({FlightLabel::ServerFlight,
                     kS2C,
                     kem.ciphertext_bytes + params.resumed_server_overhead_bytes,
                     {{Entity::Server, CryptoOpKind::Encaps, kem.encaps_cycles},
                      {Entity::Client, CryptoOpKind::Decaps, kem.decaps_cycles}}});
  flights.push_back({FlightLabel::ServerFinish, kS2C, params.eap_success_bytes, {}});
  return flights;
}

Bytes session_cache_entry_bytes(const SignatureSpec& client_sig) {
  return kSessionCacheBase + client_sig.public_key_bytes + client_sig.signature_bytes;
}

ResumptionStorage resumption_storage(const SignatureSpec& client_sig, ResumptionMode mode) {
  const Bytes entry = session_cache_entry_bytes(client_sig);
  if (mode == ResumptionMode::Stateful) return {entry, 0};
  return {0, entry};
}

std::string flights_to_csv(std::span<const Flight> flights, Bytes fragment_size) {
  std::string out = "label,direction,bytes,fragments\n";
  for (const auto& f : flights) {
    out += fmt::format("{},{},{},{}\n", to_string(f.label), to_string(f.direction),
                       f.payload_bytes, fragment_count(f.payload_bytes, fragment_size));
  }
  return out;
}

}  // namespace pqwpa
