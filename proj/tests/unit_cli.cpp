#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "json_schema_lite.hpp"
#include "wstrata/cache.hpp"
#include "wstrata/cli.hpp"

using nlohmann::json;
using wstrata::run_cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json parse_payload(const CliResult& r) {
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

const json& schema() {
  static const json loaded = [] {
    std::ifstream in(SCHEMA_PATH);
    REQUIRE(in);
    return json::parse(in);
  }();
  return loaded;
}

void check_schema(const json& payload) {
  REQUIRE(payload.contains("kind"));
  const std::string verdict =
      schema_lite::validate_def(schema(), payload["kind"].get<std::string>(), payload);
  INFO("schema violation: ", verdict);
  CHECK(verdict.empty());
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / tag) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("adm --count") {
  CHECK(cli({"adm", "--g", "1", "--count"}).out == "3\n");
  CHECK(cli({"adm", "--g", "2", "--count"}).out == "13\n");
  CHECK(cli({"adm", "--g", "1", "--count"}).code == 0);
}

TEST_CASE("info payload") {
  const json payload = parse_payload(cli({"info", "--g", "3"}));
  check_schema(payload);
  CHECK(payload["kind"] == "info");
  CHECK(payload["g"] == 3);
  CHECK(payload["affineGenerators"] == 4);
  CHECK(payload["finiteGroupOrder"] == 48);
  CHECK(payload["positiveRoots"] == 9);
  CHECK(payload["finalElements"] == 8);
  CHECK(payload["muOrbitSize"] == 8);
  CHECK(payload["minusculeTranslationLength"] == 6);
}

TEST_CASE("adm element table") {
  const json payload = parse_payload(cli({"adm", "--g", "2", "--list"}));
  check_schema(payload);
  CHECK(payload["kind"] == "adm");
  CHECK(payload["count"] == 13);
  REQUIRE(payload["elements"].size() == 13);
  CHECK(payload["elements"][0]["id"] == 0);
  CHECK(payload["elements"][0]["length"] == 0);
  CHECK(payload["elements"][0]["omegaPower"] == 1);
  CHECK(payload["elements"][0]["word"] == json::array());
  CHECK(payload["elements"][0]["text"] == "t");
  CHECK(payload["elements"][12]["length"] == 3);
}

TEST_CASE("adm csv") {
  const CliResult r = cli({"adm", "--g", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "id,length,omegaPower,word\r\n"
        "0,0,1,t\r\n"
        "1,1,1,t s0\r\n"
        "2,1,1,t s1\r\n");
}

TEST_CASE("adm-j blocks") {
  const json payload = parse_payload(cli({"adm-j", "--g", "2", "--j", "0,2"}));
  check_schema(payload);
  CHECK(payload["kind"] == "admJ");
  CHECK(payload["j"] == json::array({0, 2}));
  REQUIRE(payload["blockCount"].get<int>() == static_cast<int>(payload["blocks"].size()));
  std::size_t covered = 0;
  bool saw_base = false;
  for (const json& block : payload["blocks"]) {
    covered += block["members"].size();
    CHECK(block["size"] == block["members"].size());
    if (block["minRep"]["text"] == "t") {
      saw_base = true;
      CHECK(block["size"] == 2);
      CHECK(block["members"][1]["text"] == "t s1");
      CHECK(block["lengthRange"] == json::array({0, 1}));
    }
  }
  CHECK(saw_base);
  CHECK(covered == 13);
}

TEST_CASE("classify with an explicit element") {
  const json payload = parse_payload(cli({"classify", "--g", "2", "--j", "0,2", "--x", "t"}));
  check_schema(payload);
  CHECK(payload["kind"] == "classify");
  REQUIRE(payload["reports"].size() == 1);
  const json& report = payload["reports"][0];
  CHECK(report["cSuperspecial"] == json::array({0}));
  CHECK(report["isSupersingular"] == true);
  CHECK(report["members"].size() == 2);
  CHECK(report["members"][0]["text"] == "t");
  CHECK(report["members"][1]["text"] == "t s1");
  CHECK(report["lengthRange"] == json::array({0, 1}));
}

TEST_CASE("classify the whole level") {
  const json payload = parse_payload(cli({"classify", "--g", "2", "--j", "0,1,2"}));
  check_schema(payload);
  REQUIRE(payload["reports"].size() == 13);
  int supersingular = 0;
  for (const json& report : payload["reports"])
    if (report["isSupersingular"].get<bool>()) ++supersingular;
  CHECK(supersingular == 5);
}

TEST_CASE("eo golden table") {
  const json payload = parse_payload(cli({"eo", "--g", "2"}));
  check_schema(payload);
  CHECK(payload["kind"] == "eo");
  REQUIRE(payload["rows"].size() == 4);
  const json& rows = payload["rows"];
  CHECK(rows[0]["final"] == "e");
  CHECK(rows[0]["psi"] == json::array({0, 0}));
  CHECK(rows[0]["j"] == json::array({0, 2}));
  CHECK(rows[0]["fullType"] == json::array({0, 2, 4}));
  CHECK(rows[0]["blockSize"] == 2);
  CHECK(rows[1]["final"] == "s2");
  CHECK(rows[1]["psi"] == json::array({0, 1}));
  CHECK(rows[1]["j"] == json::array({0, 1, 2}));
  CHECK(rows[2]["final"] == "s1 s2");
  CHECK(rows[2]["psi"] == json::array({1, 1}));
  CHECK(rows[2]["j"] == json::array({0, 1, 2}));
  CHECK(rows[3]["final"] == "s2 s1 s2");
  CHECK(rows[3]["psi"] == json::array({1, 2}));
  CHECK(rows[3]["j"] == json::array({0, 2}));
  for (const json& row : rows) CHECK(row["uniqueMin"] == true);
}

TEST_CASE("eo csv") {
  const CliResult r = cli({"eo", "--g", "2", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "final,psi,length,j,blockSize,uniqueMin\r");
  std::getline(lines, line);
  CHECK(line == "e,\"(0,0)\",0,\"0,2\",2,true\r");
  std::getline(lines, line);
  CHECK(line == "s2,\"(0,1)\",1,\"0,1,2\",1,true\r");
}

TEST_CASE("verify payloads") {
  const json payload = parse_payload(cli({"verify", "--g", "2", "--suite", "thm45"}));
  check_schema(payload);
  CHECK(payload["kind"] == "verify");
  CHECK(payload["pass"] == true);
  REQUIRE(payload["suites"].size() == 1);
  CHECK(payload["suites"][0]["suite"] == "thm45");
  CHECK(payload["suites"][0]["pass"] == true);
  CHECK(payload["suites"][0]["counterexamples"] == json::array());
  bool found = false;
  for (const json& note : payload["suites"][0]["notes"])
    found = found || note.get<std::string>() == "iwahori supersingular strata: 5";
  CHECK(found);

  for (const std::string& suite : {"coxeter", "perm-adm", "lemma3", "lemma4", "eo"}) {
    const json one = parse_payload(cli({"verify", "--g", "2", "--suite", suite}));
    check_schema(one);
    CHECK(one["pass"] == true);
    REQUIRE(one["suites"].size() == 1);
    CHECK(one["suites"][0]["suite"] == suite);
  }

  const json all = parse_payload(cli({"verify", "--g", "1", "--suite", "all"}));
  check_schema(all);
  CHECK(all["suites"].size() == 6);
  CHECK(all["pass"] == true);
}

TEST_CASE("hasse output") {
  const CliResult r = cli({"hasse", "--g", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph adm {\n  rankdir=BT;\n", 0) == 0);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.find(" -> ") != std::string::npos) ++edges;
  }
  CHECK(nodes == 13);
  const auto adm = wstrata::AdmSet::enumerate(wstrata::GroupContext(2));
  CHECK(edges == adm.hasse_edges().size());
  CHECK(r.out.find("[label=\"t\"]") != std::string::npos);

  TempDir dir("wstrata-test-dot");
  const std::string file = (dir.path / "adm.dot").string();
  const CliResult to_file = cli({"hasse", "--g", "2", "-o", file});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(file, std::ios::binary);
  std::stringstream sink;
  sink << in.rdbuf();
  CHECK(sink.str() == r.out);

  const CliResult bad = cli({"hasse", "--g", "1", "-o", (dir.path / "no" / "dir.dot").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cannot open") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate", "--g", "2"}).code == 2);
  CHECK(cli({"adm"}).code == 2);                                // missing --g
  CHECK(cli({"adm", "--g", "0", "--count"}).code == 2);         // range
  CHECK(cli({"adm", "--g", "13", "--count"}).code == 2);        // range
  CHECK(cli({"adm", "--g", "7", "--count"}).code == 2);         // resource cap
  CHECK(cli({"adm", "--g", "2", "--count", "--list"}).code == 2);
  CHECK(cli({"adm", "--g", "2", "--format", "xml"}).code == 2);
  CHECK(cli({"verify", "--g", "2", "--suite", "bogus"}).code == 2);
  CHECK(cli({"adm-j", "--g", "2", "--j", "0,7"}).code == 2);    // index out of range
  CHECK(cli({"adm-j", "--g", "2", "--j", "0,,2"}).code == 2);
  CHECK(cli({"classify", "--g", "2", "--j", "0,2", "--x", "t s9"}).code == 2);
  CHECK(cli({"classify", "--g", "2", "--j", "0,2", "--x", "zork"}).code == 2);
  CHECK(cli({"classify", "--g", "2", "--j", "0,2", "--x", "s1"}).code == 2);  // not admissible
  const CliResult bad_x = cli({"classify", "--g", "2", "--j", "0,2", "--x", "s1"});
  CHECK(bad_x.err.find("not admissible") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"adm", "--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"eo", "--g", "2"},
        std::vector<std::string>{"adm", "--g", "2"},
        std::vector<std::string>{"classify", "--g", "2", "--j", "1"},
        std::vector<std::string>{"verify", "--g", "2", "--suite", "all"},
        std::vector<std::string>{"hasse", "--g", "2"}}) {
    const CliResult first = cli(args);
    const CliResult second = cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("cache directory flag") {
  TempDir dir("wstrata-test-cli-cache");
  const std::string flag = dir.path.string();
  const CliResult cold = cli({"adm", "--g", "2", "--count", "--cache", flag});
  CHECK(cold.code == 0);
  CHECK(cold.out == "13\n");
  const std::filesystem::path file = dir.path / wstrata::cache_file_name(2);
  REQUIRE(std::filesystem::exists(file));

  const CliResult warm = cli({"adm", "--g", "2", "--count", "--cache", flag});
  CHECK(warm.out == "13\n");
  CHECK(warm.err.empty());

  // Corruption: one warning, correct output, snapshot repaired in place.
  {
    std::ofstream bad(file, std::ios::binary | std::ios::trunc);
    bad << "WSTRATA 1\nnot really\n";
  }
  const CliResult repaired = cli({"adm", "--g", "2", "--count", "--cache", flag});
  CHECK(repaired.code == 0);
  CHECK(repaired.out == "13\n");
  CHECK(repaired.err.find("discarding") != std::string::npos);
  std::ostringstream warn;
  CHECK(wstrata::cache_try_load(wstrata::GroupContext(2), file, &warn).has_value());
}

TEST_CASE("cache directory environment override") {
  TempDir env_dir("wstrata-test-env-cache");
  TempDir flag_dir("wstrata-test-flag-cache");
  REQUIRE(setenv("STRATA_CACHE_DIR", env_dir.path.c_str(), 1) == 0);
  const CliResult r = cli({"adm", "--g", "1", "--count", "--cache", flag_dir.path.string()});
  REQUIRE(unsetenv("STRATA_CACHE_DIR") == 0);
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(env_dir.path / wstrata::cache_file_name(1)));
  CHECK_FALSE(std::filesystem::exists(flag_dir.path / wstrata::cache_file_name(1)));
}
