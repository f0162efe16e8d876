// End-to-end tests for the kmshadow binary: golden outputs, the exit-code
// contract, format handling, and cross-worker determinism. The binary path
// comes from KMSHADOW_BIN and the golden directory from KMSHADOW_GOLDEN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "kmshadow/binrep.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string bin_path() {
  const char* bin = std::getenv("KMSHADOW_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "KMSHADOW_BIN must point at the kmshadow binary");
  return bin;
}

std::string golden_dir() {
  const char* dir = std::getenv("KMSHADOW_GOLDEN");
  REQUIRE_MESSAGE(dir != nullptr, "KMSHADOW_GOLDEN must point at tests/golden");
  return dir;
}

// Runs `kmshadow <args>` through the shell with stderr discarded, capturing
// stdout and the exit status.
RunResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + bin_path() + "\" " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
  CAPTURE(args);
  const RunResult result = run_cli(args);
  CHECK(result.exit_code == 0);
  CHECK(result.out == read_file(golden_dir() + "/" + golden_name));
}

}  // namespace

TEST_CASE("golden: rep examples") {
  check_golden("rep 5 --k 2", "rep_5_k2.txt");
  check_golden("rep 5 --k 2 --extended", "rep_5_k2_extended.txt");
  check_golden("rep 0 --k 3", "rep_0_k3.txt");
}

TEST_CASE("golden: translates examples") {
  check_golden("translates 5 --k 1", "translates_5_k1.txt");
  check_golden("translates 0 --k 3", "translates_0_k3.txt");
  check_golden("translates 6 --k 2", "translates_6_k2.txt");
}

TEST_CASE("golden: shadow of a family file") {
  check_golden("shadow \"" + golden_dir() + "/pair_22_31.fam\"", "shadow_pair.txt");
}

TEST_CASE("golden: enumerate and the enumerate | shadow pipeline") {
  check_golden("enumerate --kind multiset --k 2 --n 5", "enumerate_m2_5.txt");
  const std::string pipeline = "enumerate --kind multiset --k 2 --n 5 2>/dev/null | \"" +
                               bin_path() + "\" shadow -";
  const RunResult result = run_cli(pipeline);
  CHECK(result.exit_code == 0);
  CHECK(result.out == read_file(golden_dir() + "/shadow_fm2_5.txt"));
}

TEST_CASE("golden: sweep-equality csv catalog") {
  check_golden("sweep-equality --k 1 --n-max 6 --format csv", "sweep_k1_n6.csv");
  const RunResult empty = run_cli("sweep-equality --k 1 --n-max 0 --format csv");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "k,n,a\n");
}

TEST_CASE("golden: verify suite text reports") {
  check_golden("verify theorem1 --k 1 --n-max 6", "verify_theorem1_k1_n6.txt");
  check_golden("verify ew --k 1 --n-max 2", "verify_ew_k1_n2.txt");
}

TEST_CASE("sweep-equality output is byte-identical across worker counts") {
  for (const char* format : {"csv", "text"}) {
    CAPTURE(format);
    const RunResult serial =
        run_cli(std::string("sweep-equality --k 2 --n-max 300 --jobs 1 --format ") + format);
    const RunResult parallel =
        run_cli(std::string("sweep-equality --k 2 --n-max 300 --jobs 4 --format ") + format);
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
    CHECK_FALSE(serial.out.empty());
  }
}

TEST_CASE("json documents carry the schema and reconstruct the input") {
  const RunResult result =
      run_cli("rep 123456789012345678901234567890 --k 4 --format json");
  REQUIRE(result.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(result.out);
  for (const char* key : {"version", "command", "timestamp", "params", "results", "summary"})
    CHECK(doc.contains(key));
  CHECK(doc["version"] == kmshadow::kVersion);
  CHECK(doc["command"] == "rep");
  REQUIRE(doc["results"].size() == 1);
  const auto& rep = doc["results"][0];
  kmshadow::KBinomialRep parsed;
  parsed.order = rep["k"].get<int>();
  for (const auto& c : rep["coefficients"]) parsed.coeffs.push_back(c.get<long>());
  CHECK(kmshadow::to_string(kmshadow::value(parsed)) ==
        rep["n"].get<std::string>());
  CHECK(rep["n"] == "123456789012345678901234567890");
}

TEST_CASE("json verify document reports aggregate checks") {
  const RunResult result = run_cli("verify macaulay --k1 2 --m 4 --format json");
  REQUIRE(result.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(result.out);
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["check_id"] == "subset-shadow-bound");
  CHECK(doc["results"][0]["holds"] == true);
  CHECK(doc["results"][0]["params"]["prefix_equality"] == "true");
  CHECK(doc["summary"]["exit"] == 0);

  const RunResult sweep = run_cli("sweep-equality --k 1 --n-max 6 --format json");
  REQUIRE(sweep.exit_code == 0);
  const nlohmann::json catalog = nlohmann::json::parse(sweep.out);
  REQUIRE(catalog["results"].size() == 1);
  const auto& entry = catalog["results"][0];
  CHECK(entry["check_id"] == "main-inequality-sweep");
  CHECK(entry["stats"]["checked"] == 8);
  CHECK(entry["stats"]["equal"] == 4);
  const nlohmann::json expected_pairs =
      nlohmann::json::array({{"2", "1"}, {"4", "1"}, {"4", "2"}, {"5", "2"}});
  CHECK(entry["pairs"] == expected_pairs);
}

TEST_CASE("exit-code contract") {
  CHECK(run_cli("rep abc --k 2").exit_code == 2);           // bad numeral
  CHECK(run_cli("rep 5").exit_code == 2);                   // missing --k
  CHECK(run_cli("nonsense").exit_code == 2);                // unknown command
  CHECK(run_cli("verify nosuite").exit_code == 2);          // unknown suite
  CHECK(run_cli("rep 5 --k 2 --format csv").exit_code == 2);  // csv not flat
  CHECK(run_cli("shadow /nonexistent.fam").exit_code == 2);
  CHECK(run_cli("verify theorem1 --n 5 --a 4").exit_code == 2);  // hypothesis
  CHECK(run_cli("verify theorem1 --n-max 20000000").exit_code == 3);  // guard
  CHECK(run_cli("verify theorem1 --k 1 --n-max 100000 --budget-seconds 0.001")
            .exit_code == 3);
  CHECK(run_cli("verify ew --k 1 --n-max 2").exit_code == 0);  // data, not failure
  CHECK(run_cli("verify ew --n 1 --a 1").exit_code == 0);
  CHECK(run_cli("verify theorem1 --n 5 --a 2").exit_code == 0);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
}

TEST_CASE("malformed family files report the offending line") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path bad = dir / "kmshadow_cli_bad.fam";
  {
    std::ofstream out(bad);
    out << "kind=multiset k=2\n3\n";
  }
  const std::string cmd = "\"" + bin_path() + "\" shadow \"" + bad.string() +
                          "\" 2>&1 1>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  fs::remove(bad);
  CHECK(result.exit_code == 2);
  CHECK(result.out.find("line 2") != std::string::npos);
}

TEST_CASE("--output writes the payload to a file and keeps stdout quiet") {
  namespace fs = std::filesystem;
  const fs::path target = fs::temp_directory_path() / "kmshadow_cli_out.csv";
  fs::remove(target);
  const RunResult result = run_cli("sweep-equality --k 1 --n-max 6 --format csv --output \"" +
                                   target.string() + "\"");
  CHECK(result.exit_code == 0);
  CHECK(result.out.empty());
  CHECK(read_file(target.string()) ==
        read_file(golden_dir() + "/sweep_k1_n6.csv"));
  fs::remove(target);
}

TEST_CASE("rep text round-trips through the family of coefficients") {
  // Fuzzy sanity for big inputs driven end to end through the binary.
  const RunResult result = run_cli("rep 1000000000000000000000000000000 --k 3");
  REQUIRE(result.exit_code == 0);
  const std::string needle = "representation = [";
  const auto at = result.out.find(needle);
  REQUIRE(at != std::string::npos);
  const auto end = result.out.find(']', at);
  std::string inner = result.out.substr(at + needle.size(), end - at - needle.size());
  kmshadow::KBinomialRep rep;
  rep.order = 3;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    const std::size_t comma = inner.find(',', pos);
    rep.coeffs.push_back(std::stol(inner.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  REQUIRE(rep.coeffs.size() == 3);
  CHECK(kmshadow::to_string(kmshadow::value(rep)) ==
        "1000000000000000000000000000000");
}
