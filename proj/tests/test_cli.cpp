#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_raw(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run(const std::string& args) {
  return run_raw(std::string(PERMGEN_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("estimate --n 1 --trials 10").exit_code == 2);
  CHECK(run("estimate").exit_code == 2);              // missing --n
  CHECK(run("count --quantity bogus").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("second-moment --n 8 --trials 5").exit_code == 2);  // empty window
  CHECK(run("count --quantity frakM --n 200").exit_code == 2);  // guard
}

TEST_CASE("count emits exact decimal strings") {
  auto r = run("count --quantity frakC --n 12");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["payload"]["value"]["kind"] == "exact-decimal");
  CHECK(doc["payload"]["value"]["value"] == "68428800");

  auto kn = run("count --quantity kN --n 3 --N 6");
  const json kdoc = json::parse(kn.output);
  CHECK(kdoc["payload"]["value"]["value"] == "19");

  auto series = run("count --quantity series --n 50 --order 6");
  const json sdoc = json::parse(series.output);
  CHECK(sdoc["payload"]["value"]["kind"] == "float64");
}

TEST_CASE("chars CSV has one row and column per partition") {
  auto r = run("chars --n 5");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string line;
  int rows = 0;
  int commas = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const int c = static_cast<int>(std::count(line.begin(), line.end(), ','));
    if (commas == -1) commas = c;
    CHECK(c == commas);
    ++rows;
  }
  CHECK(rows == 8);    // header + 7 partitions
  CHECK(commas == 7);  // label column + 7 classes
}

TEST_CASE("estimate runs and reports tagged numerics") {
  auto r = run("estimate --n 8 --trials 400 --seed 5 --workers 2");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["payload"]["results"]["estimate"]["kind"] == "float64");
  CHECK(doc["payload"]["results"]["counts"]["AllOrAlternating"]["kind"] == "exact-decimal");
  CHECK(doc["manifest"]["tool_version"] == "0.1.0");
}

TEST_CASE("payloads are byte-identical across reruns and worker counts") {
  auto a = run("second-moment --n 12 --N 36 --trials 200 --seed 8 --workers 1");
  auto b = run("second-moment --n 12 --N 36 --trials 200 --seed 8 --workers 2");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  const std::string pa = json::parse(a.output)["payload"].dump();
  const std::string pb = json::parse(b.output)["payload"].dump();
  CHECK(pa == pb);

  auto c = run("words --n 9 --N 3 --trials 100 --seed 8 --workers 1");
  auto d = run("words --n 9 --N 3 --trials 100 --seed 8 --workers 2");
  CHECK(json::parse(c.output)["payload"].dump() ==
        json::parse(d.output)["payload"].dump());
}

TEST_CASE("environment variable provides the default seed") {
  auto with_env = run_raw(std::string("PERMGEN_SEED=321 ") + PERMGEN_CLI_PATH +
                          " estimate --n 5 --trials 50");
  REQUIRE(with_env.exit_code == 0);
  const json doc = json::parse(with_env.output);
  CHECK(doc["payload"]["config"]["seed"]["value"] == "321");

  auto explicit_seed = run("estimate --n 5 --trials 50 --seed 9");
  CHECK(json::parse(explicit_seed.output)["payload"]["config"]["seed"]["value"] == "9");
}

TEST_CASE("verify exit codes") {
  auto ok = run("verify --suite correlation");
  CHECK(ok.exit_code == 0);
  std::istringstream in(ok.output);
  std::string line;
  int check_lines = 0;
  while (std::getline(in, line)) {
    if (line.find("\"check\"") != std::string::npos) ++check_lines;
  }
  CHECK(check_lines == 5);
}

TEST_CASE("tsv outputs") {
  const std::string tsv = "/tmp/permgen_test_hist.tsv";
  auto r = run("second-moment --n 9 --N 4 --trials 100 --seed 2 --json /dev/null --tsv " + tsv);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(tsv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x\ttrials");
  std::remove(tsv.c_str());
}
