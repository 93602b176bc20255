#include "pqwpa/annoyance.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <json.hpp>

namespace pqwpa {

std::string_view to_string(AttackTarget target) {
  switch (target) {
    case AttackTarget::ClientCertificate: return "client-certificate";
    case AttackTarget::ServerCertificate: return "server-certificate";
    case AttackTarget::KeyShareSessionKey: return "key-share-session-key";
  }
  return "?";
}

std::string_view to_string(AnnoyanceLevel level) {
  switch (level) {
    case AnnoyanceLevel::Low: return "low";
    case AnnoyanceLevel::Medium: return "medium";
    case AnnoyanceLevel::High: return "high";
  }
  return "?";
}

std::string impact_letters(const Impact& impact) {
  std::string s;
  if (impact.confidentiality) s += 'C';
  if (impact.integrity) s += 'I';
  if (impact.availability) s += 'A';
  return s.empty() ? "-" : s;
}

AnnoyanceRating rate_target(AttackTarget target) {
  switch (target) {
    // One broken client key impersonates one client.
    case AttackTarget::ClientCertificate:
      return {target, AnnoyanceLevel::Medium, {false, true, false}};
    // One broken server key enables evil twins for every client.
    case AttackTarget::ServerCertificate:
      return {target, AnnoyanceLevel::Low, {true, true, true}};
    // Every session needs its own break.
    case AttackTarget::KeyShareSessionKey:
      return {target, AnnoyanceLevel::High, {true, true, false}};
  }
  return {target, AnnoyanceLevel::High, {}};
}

bool DeploymentAudit::fully_protected() const {
  return std::none_of(findings.begin(), findings.end(),
                      [](const TargetFinding& f) { return f.exposure == Exposure::Exposed; });
}

DeploymentAudit evaluate_deployment(const SignatureSpec& client_sig,
                                    const SignatureSpec& server_sig, const KemSpec& kem) {
  DeploymentAudit audit;
  auto add = [&audit](AttackTarget target, bool classical, const std::string& scheme) {
    TargetFinding f{target, classical ? Exposure::Exposed : Exposure::Protected,
                    rate_target(target), scheme};
    f.harvest_now_decrypt_later = classical && target == AttackTarget::KeyShareSessionKey;
    audit.findings.push_back(std::move(f));
  };
  add(AttackTarget::ClientCertificate, client_sig.is_classical(), client_sig.name);
  add(AttackTarget::ServerCertificate, server_sig.is_classical(), server_sig.name);
  add(AttackTarget::KeyShareSessionKey, kem.is_classical(), kem.name);

  std::stable_sort(audit.findings.begin(), audit.findings.end(),
                   [](const TargetFinding& a, const TargetFinding& b) {
                     if (a.exposure != b.exposure) return a.exposure == Exposure::Exposed;
                     if (a.exposure == Exposure::Protected) return false;
                     return a.rating.level < b.rating.level;
                   });
  return audit;
}

DeploymentAudit evaluate_deployment(std::string_view client_sig, std::string_view server_sig,
                                    std::string_view kem, const Registry& registry) {
  return evaluate_deployment(registry.resolve_signature(client_sig),
                             registry.resolve_signature(server_sig), registry.resolve_kem(kem));
}

std::string audit_to_json(const DeploymentAudit& audit) {
  nlohmann::ordered_json doc;
  doc["fully_protected"] = audit.fully_protected();
  auto& arr = doc["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : audit.findings) {
    nlohmann::ordered_json j;
    j["target"] = to_string(f.target);
    j["status"] = f.exposure == Exposure::Exposed ? "EXPOSED" : "PROTECTED";
    j["scheme"] = f.protecting_scheme;
    j["annoyance"] = to_string(f.rating.level);
    j["impact"] = {{"confidentiality", f.rating.impact.confidentiality},
                   {"integrity", f.rating.impact.integrity},
                   {"availability", f.rating.impact.availability}};
    j["harvest_now_decrypt_later"] = f.harvest_now_decrypt_later;
    arr.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string audit_to_table(const DeploymentAudit& audit) {
  std::string out = fmt::format("{:<24}{:<11}{:<10}{:<8}{}\n", "target", "status", "annoyance",
                                "impact", "scheme");
  for (const auto& f : audit.findings) {
    out += fmt::format("{:<24}{:<11}{:<10}{:<8}{}{}\n", to_string(f.target),
                       f.exposure == Exposure::Exposed ? "EXPOSED" : "PROTECTED",
                       to_string(f.rating.level), impact_letters(f.rating.impact),
                       f.protecting_scheme,
                       f.harvest_now_decrypt_later ? "  [harvest-now-decrypt-later]" : "");
  }
  return out;
}

}  // namespace pqwpa
