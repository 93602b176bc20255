// Runs the pqwpa executable end to end.
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "oracles.hpp"

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PQWPA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, RegistryExportMatchesGolden) {
  const auto r = run("registry export");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(oracle::golden_diff(oracle::read_file(PQWPA_GOLDEN_DIR "/registry.csv"), r.out).empty());
}

TEST(Cli, SimulateOneScenario) {
  const auto file = write_temp("pqwpa_cli_sim.yaml", "signature = ML-DSA-65\nrepetitions = 20\n");
  const auto a = run("simulate " + file.string());
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(oracle::read_csv(a.out).size(), 2u);
  EXPECT_EQ(run("simulate " + file.string()).out, a.out);
  const auto other = run("simulate " + file.string() + " --seed 7");
  EXPECT_NE(other.out, a.out);
  const auto json = run("simulate " + file.string() + " --format json");
  EXPECT_NE(json.out.find("\"seed\": \"0xc0ffee\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto bad_key = write_temp("pqwpa_cli_bad.yaml", "signature: ML-DSA-65\nbandwith: 1\n");
  EXPECT_EQ(run("simulate " + bad_key.string()).status, 2);
  const auto bad_alg = write_temp("pqwpa_cli_alg.yaml", "signature: ML-DSA-66\n");
  EXPECT_EQ(run("simulate " + bad_alg.string()).status, 2);
  EXPECT_EQ(run("simulate /nonexistent/file.yaml").status, 1);
  EXPECT_EQ(run("frobnicate").status, 2);
  const auto aborts = write_temp("pqwpa_cli_abort.yaml",
                                 "signature: SLH-DSA-SHA2-256f\nround_trip_cap: 10\n");
  EXPECT_EQ(run("simulate " + aborts.string()).status, 3);
}

TEST(Cli, CompareDefaultMatrix) {
  const auto r = run("compare --reps 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(oracle::read_csv(r.out).size(), 73u);
}

TEST(Cli, CompareMatrixFile) {
  const auto file = write_temp("pqwpa_cli_matrix.yaml", R"(
repetitions: 5
matrix:
  signatures: [ML-DSA-44, Falcon-512]
  bands: [2.4GHz, 5GHz]
)");
  const auto r = run("compare " + file.string() + " --jobs 2");
  ASSERT_EQ(r.status, 0);
  const auto rows = oracle::read_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][0], "ML-DSA-44/EAP-TLS/2.4GHz/excellent");
  EXPECT_EQ(rows[4][0], "Falcon-512/EAP-TLS/5GHz/excellent");
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run("recommend").status, 0);
  const auto res = run("resumption --reps 5");
  ASSERT_EQ(res.status, 0);
  EXPECT_EQ(oracle::read_csv(res.out).size(), 13u);
  const auto ann = run("annoyance --client-sig RSA-2048 --server-sig RSA-2048 --kem X25519");
  ASSERT_EQ(ann.status, 0);
  EXPECT_NE(ann.out.find("EXPOSED"), std::string::npos);
  EXPECT_EQ(run("annoyance --client-sig Nope --server-sig RSA-2048 --kem X25519").status, 2);
  EXPECT_EQ(run("reference").status, 0);
}
