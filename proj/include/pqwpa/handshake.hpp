#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqwpa/algo_registry.hpp"
#include "pqwpa/units.hpp"

namespace pqwpa {

enum class EapMethod { EapTls, EapTtls };

enum class FlightLabel {
  IdentityRequest,
  IdentityResponse,
  TlsStart,
  ClientHello,
  ServerFlight,
  ClientFlight,
  ServerFinish,
};

enum class Direction { ClientToServer, ServerToClient };

enum class Entity { Client, AccessPoint, Server };

enum class CryptoOpKind { KeyGen, Encaps, Decaps, Sign, Verify };

std::string_view to_string(EapMethod method);
std::string_view to_string(FlightLabel label);
std::string_view to_string(Direction direction);
std::string_view to_string(Entity entity);
std::string_view to_string(CryptoOpKind kind);

struct CryptoOp {
  Entity entity;
  CryptoOpKind kind;
  Cycles cycles;
  friend bool operator==(const CryptoOp&, const CryptoOp&) = default;
};

struct Flight {
  FlightLabel label;
  Direction direction;
  Bytes payload_bytes = 0;
  std::vector<CryptoOp> crypto_ops;

  Entity sender() const {
    return direction == Direction::ClientToServer ? Entity::Client : Entity::Server;
  }
  friend bool operator==(const Flight&, const Flight&) = default;
};

struct Fragment {
  FlightLabel flight_label;
  std::size_t index;
  Bytes bytes;
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// Certificate chain layout per peer. The constructor rejects a zero-length
// chain.
class ChainShape {
 public:
  ChainShape() = default;
  ChainShape(unsigned chain_length, Bytes cert_encoding_overhead, Bytes handshake_overhead);

  unsigned chain_length() const { return chain_length_; }
  Bytes cert_encoding_overhead() const { return cert_encoding_overhead_; }
  Bytes handshake_overhead() const { return handshake_overhead_; }

  friend bool operator==(const ChainShape&, const ChainShape&) = default;

 private:
  unsigned chain_length_ = 1;
  Bytes cert_encoding_overhead_ = 600;
  Bytes handshake_overhead_ = 170;
};

// Fixed payloads of the flights that carry no algorithm-dependent data.
struct HandshakeParams {
  Bytes identity_request_bytes = 0;
  Bytes identity_response_bytes = 16;
  Bytes eap_success_bytes = 4;
  // One inner round trip for the tunnelled client authentication.
  Bytes ttls_inner_bytes = 200;
  // Hello headers plus the pre_shared_key extension on a resumed ClientHello.
  Bytes psk_extension_bytes = 250;
  // ServerHello headers and Finished on a resumed handshake.
  Bytes resumed_server_overhead_bytes = 170;
  std::size_t round_trip_cap = 500;

  friend bool operator==(const HandshakeParams&, const HandshakeParams&) = default;
};

inline constexpr Bytes kDefaultFragmentSize = 1398;
// Fixed part of a server session-cache entry.
inline constexpr Bytes kSessionCacheBase = 654;

enum class ResumptionMode { Stateful, Stateless };

std::string_view to_string(ResumptionMode mode);

Bytes certificate_chain_bytes(const SignatureSpec& sig, const ChainShape& shape);

// Full handshake. Throws IncompatibleConfig when a non-classical certificate
// is paired with a classical-only key exchange.
std::vector<Flight> build_flights(EapMethod method, const SignatureSpec& sig,
                                  const KemSpec& kem, const ChainShape& shape,
                                  const HandshakeParams& params = {});

std::vector<Fragment> fragment_flight(const Flight& flight, Bytes fragment_size);

std::size_t fragment_count(Bytes payload_bytes, Bytes fragment_size);

// EAP round trips: one per fragment.
std::size_t count_round_trips(std::span<const Flight> flights, Bytes fragment_size);

// Two EAP messages (request + acknowledging response) per fragment.
std::size_t count_eap_messages(std::span<const Flight> flights, Bytes fragment_size);

// Throws RoundTripLimitExceeded.
void check_round_trip_cap(std::span<const Flight> flights, Bytes fragment_size,
                          std::size_t cap);

Bytes total_payload_bytes(std::span<const Flight> flights);
Cycles total_crypto_cycles(std::span<const Flight> flights);

// Abbreviated handshake: fresh key exchange, no certificates. In stateless
// mode the ClientHello also carries the session ticket.
std::vector<Flight> resumption_flights(const SignatureSpec& sig, const KemSpec& kem,
                                       const HandshakeParams& params = {},
                                       ResumptionMode mode = ResumptionMode::Stateful);

Bytes session_cache_entry_bytes(const SignatureSpec& client_sig);

struct ResumptionStorage {
  Bytes server_bytes;
  Bytes client_bytes;
};

ResumptionStorage resumption_storage(const SignatureSpec& client_sig, ResumptionMode mode);

// label,direction,bytes,fragments
std::string flights_to_csv(std::span<const Flight> flights, Bytes fragment_size);

}  // namespace pqwpa
