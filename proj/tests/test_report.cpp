#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include <json.hpp>

#include "oracles.hpp"
#include "pqwpa/errors.hpp"
#include "pqwpa/recommend.hpp"
#include "pqwpa/report.hpp"

using namespace pqwpa;

namespace {

RecommendationVerdict classify(const std::string& sig, EapMethod m = EapMethod::EapTls) {
  const auto& r = Registry::standard();
  const auto& s = r.lookup_signature(sig);
  const auto& k = s.is_classical() ? r.lookup_kem("X25519") : r.kem_for_level(s.level);
  return classify_recommended(s, k, m, ChainShape{}, kDefaultFragmentSize, r);
}

}  // namespace

TEST(Recommend, LatticeSchemesRecommended) {
  for (const char* n : {"ML-DSA-44", "ML-DSA-65", "ML-DSA-87", "Falcon-512", "Falcon-1024"}) {
    const auto v = classify(n);
    EXPECT_TRUE(v.recommended) << n;
    EXPECT_TRUE(v.reasons.empty());
  }
}

TEST(Recommend, SlhDsaRejections) {
  const auto s192 = classify("SLH-DSA-SHA2-192s");
  EXPECT_FALSE(s192.recommended);
  EXPECT_TRUE(std::any_of(s192.reasons.begin(), s192.reasons.end(), [](const std::string& r) {
    return r.find("exceeds RSA baseline") != std::string::npos;
  }));
  const auto f256 = classify("SLH-DSA-SHA2-256f");
  EXPECT_FALSE(f256.recommended);
  EXPECT_TRUE(std::any_of(f256.reasons.begin(), f256.reasons.end(), [](const std::string& r) {
    return r.find("message count") != std::string::npos;
  }));
  for (const auto& name : Registry::evaluated_signatures()) {
    if (name.rfind("SLH-DSA", 0) == 0) EXPECT_FALSE(classify(name).recommended) << name;
  }
}

TEST(Recommend, BaselineIsRsaHandshake) {
  const auto v = classify("RSA-2048");
  // Client keygen + decaps, server encaps (100k each); RSA sign twice and
  // four verifies.
  EXPECT_EQ(v.baseline_cycles, 3u * 100'000 + 2u * 27'000'000 + 4u * 45'000);
  EXPECT_EQ(v.total_handshake_cycles, v.baseline_cycles);
  EXPECT_TRUE(v.recommended);
}

TEST(Recommend, VerdictRuleAndMessageOracle) {
  for (const auto& name : Registry::evaluated_signatures()) {
    const auto v = classify(name);
    EXPECT_EQ(v.eap_messages, oracle::eap_messages(name)) << name;
    EXPECT_EQ(v.recommended,
              v.eap_messages < kRecommendedMessageLimit &&
                  v.total_handshake_cycles <= v.baseline_cycles)
        << name;
  }
}

TEST(Recommend, Serialization) {
  std::vector<RecommendationVerdict> vs = {classify("ML-DSA-65"), classify("SLH-DSA-SHA2-128f")};
  const auto csv = verdicts_to_csv(vs);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  const auto j = nlohmann::json::parse(verdicts_to_json(vs));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0]["recommended"].get<bool>());
  EXPECT_EQ(j[1]["reasons"].size(), 2u);
}

namespace {

std::vector<MatrixRow> sample_rows(std::size_t n) {
  auto scenarios = evaluation_matrix(Scenario{});
  scenarios.resize(n);
  for (auto& s : scenarios) s.repetitions = 10;
  return compare_matrix(scenarios, Registry::standard(), 1);
}

}  // namespace

TEST(Report, DeterministicBytes) {
  const auto a = sample_rows(6);
  const auto b = sample_rows(6);
  EXPECT_EQ(emit_report(a, ReportFormat::Csv), emit_report(b, ReportFormat::Csv));
  EXPECT_EQ(emit_report(a, ReportFormat::Json), emit_report(b, ReportFormat::Json));
}

TEST(Report, EmptyRejected) {
  EXPECT_THROW(emit_report({}, ReportFormat::Csv), InvalidArgument);
  EXPECT_THROW(emit_report({}, ReportFormat::Json), InvalidArgument);
}

TEST(Report, FullMatrixRowCount) {
  auto scenarios = evaluation_matrix(Scenario{});
  for (auto& s : scenarios) s.repetitions = 5;
  const auto rows = compare_matrix(scenarios, Registry::standard(), 0);
  const auto csv = emit_report(rows, ReportFormat::Csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 73);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "scenario_id,algorithm,band,situation,median_ms,p95_ms,client_ms,ap_ms,server_ms,"
            "eap_messages,frames,abort_rate");
  const auto j = nlohmann::json::parse(emit_report(rows, ReportFormat::Json));
  EXPECT_EQ(j["rows"].size(), 72u);
  EXPECT_EQ(j["rows"][0]["seed"], "0xc0ffee");
}

TEST(Report, CsvFieldsQuotedAndFailuresMarked) {
  Scenario s;
  s.signature = "Bogus,Scheme";
  s.id = "row \"one\"";
  const auto rows = compare_matrix(std::vector<Scenario>{s}, Registry::standard(), 1);
  const auto csv = emit_report(rows, ReportFormat::Csv);
  EXPECT_NE(csv.find("\"row \"\"one\"\"\",\"Bogus,Scheme\""), std::string::npos) << csv;
  EXPECT_NE(csv.find(",,,,,,,1.000"), std::string::npos);
  const auto j = nlohmann::json::parse(emit_report(rows, ReportFormat::Json));
  EXPECT_TRUE(j["rows"][0].contains("error"));
}

TEST(Report, ThreeDecimalMilliseconds) {
  const auto rows = sample_rows(1);
  const auto csv = emit_report(rows, ReportFormat::Csv);
  const auto line = csv.substr(csv.find('\n') + 1);
  const auto cells = oracle::read_csv(line).at(0);
  for (std::size_t c = 4; c <= 8; ++c) {
    const auto dot = cells[c].find('.');
    ASSERT_NE(dot, std::string::npos);
    EXPECT_EQ(cells[c].size() - dot - 1, 3u) << cells[c];
  }
}

TEST(Report, WriteDocumentErrors) {
  EXPECT_THROW(write_document("x", "/nonexistent-dir/out.csv"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "pqwpa_report_test.csv";
  write_document("a,b\n", path);
  EXPECT_EQ(oracle::read_file(path.string()), "a,b\n");
  std::filesystem::remove(path);
}
