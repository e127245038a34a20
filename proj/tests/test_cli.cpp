#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fcaffine/cli.hpp"
#include "fcaffine/golden.hpp"
#include "fcaffine/oracle.hpp"

using namespace fcaffine;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series") {
  const Run r = run({"series", "--n", "3", "--qcap", "6", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out == "[\"1\",\"3\",\"6\",\"6\",\"6\",\"6\",\"6\"]\n");

  const Run r7 = run({"series", "--n", "7", "--qcap", "15", "--format", "json"});
  const auto j = nlohmann::json::parse(r7.out);
  CHECK(j.size() == 16);
  CHECK(j.back() == "490");

  const Run r2 = run({"series", "--n", "2", "--qcap", "4", "--format", "json"});
  const auto fc = oracle::bfs_enumerate(2, 4).fc_counts();
  const auto j2 = nlohmann::json::parse(r2.out);
  for (int i = 0; i <= 4; ++i) CHECK(j2[i] == fc[i].str());

  const Run text = run({"series", "--n", "3", "--qcap", "2"});
  CHECK(text.out == "l  f_3\n0    1\n1    3\n2    6\n");
}

TEST_CASE("usage errors") {
  CHECK(run({"series", "--n", "1"}).status == 2);
  CHECK(run({"series"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"verify", "--scope", "everything"}).status == 2);
  CHECK(run({"series", "--n", "3", "--format", "xml"}).status == 2);
  const Run help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("series") != std::string::npos);
}

TEST_CASE("verify golden") {
  const Run r = run({"verify", "--scope", "golden"});
  CHECK(r.status == 0);
  CHECK(r.out.find("11 checks, 0 failed") != std::string::npos);
}

TEST_CASE("verify with a corrupted golden table") {
  auto tables = golden_tables();
  tables[3].coeffs[9] += 1;  // f_6, q^9
  const std::string path = "corrupted_golden.json";
  std::ofstream(path) << golden_json(tables);
  const Run r = run({"verify", "--scope", "golden", "--golden", path});
  std::remove(path.c_str());
  CHECK(r.status == 1);
  CHECK(r.out.find("n=6 degree=9 expected=153 got=152") != std::string::npos);
}

TEST_CASE("golden json round trip and checksum") {
  const auto& tables = golden_tables();
  CHECK(tables.size() == 10);
  CHECK(parse_golden_json(golden_json(tables)) == tables);
  CHECK(golden_checksum(tables) == kGoldenChecksum);
  auto changed = tables;
  changed[0].coeffs[0] = 2;
  CHECK(golden_checksum(changed) != kGoldenChecksum);
  CHECK_THROWS_AS(parse_golden_json("{\"tables\": 3}"), std::invalid_argument);
  for (const auto& t : tables) CHECK(static_cast<int>(t.coeffs.size()) == t.max_degree + 1);
}

TEST_CASE("verify oracle") {
  const Run r = run({"verify", "--scope", "oracle", "--n", "4", "--maxlen", "12", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 1);
}

TEST_CASE("abacus") {
  const Run r = run({"abacus", "--", "-4,-1,1,14"});
  CHECK(r.status == 0);
  CHECK(r.out.find("length             11\n") != std::string::npos);
  CHECK(r.out.find("fully commutative  no\n") != std::string::npos);

  const Run id = run({"abacus", "--format", "json", "--", "1", "2", "3", "4"});
  const auto j = nlohmann::json::parse(id.out);
  CHECK(j["length"] == "0");
  CHECK(j["class"] == "short");
  CHECK(j["profile"] == "(4)(0)(0)");

  const Run fig = run({"abacus", "--format", "json", "--", "1,3,4,6,8,11"});
  CHECK(nlohmann::json::parse(fig.out)["profile"] == "(3)(1)(2)");
  CHECK(nlohmann::json::parse(fig.out)["length"] == "4");

  CHECK(run({"abacus", "--", "-1,-4,14,1"}).status == 2);
  CHECK(run({"abacus", "--", "1,5,3"}).status == 2);
  CHECK(run({"abacus"}).status == 2);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--format", "json", "--", "-1,-4,14,1"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == "13");
  CHECK(j["fully commutative"] == "no");
  CHECK(j["coset representative"] == "[-4,-1,1,14]");
  CHECK(j["finite part"] == "[2,1,4,3]");
  CHECK(j["right descents"] == "{1,3}");

  const Run fc = run({"classify", "--", "[2,1,4,3]"});
  CHECK(fc.out.find("fully commutative     yes") != std::string::npos);
  CHECK(fc.out.find("(4)(0)(0)") != std::string::npos);
  CHECK(run({"classify", "--", "1,1"}).status == 2);
}

TEST_CASE("stats and histogram") {
  const Run s = run({"stats", "--n", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(s.out);
  long total = 0;
  for (const auto& row : j) total += std::stol(row["count"].get<std::string>());
  CHECK(total == 1 + 1 + 2 + 5);

  const Run h = run({"histogram", "--n", "3", "--maxlen", "2", "--format", "json"});
  CHECK(h.out == oracle::histogram_json(oracle::bfs_enumerate(3, 2)) + "\n");
}

TEST_CASE("output is byte-stable") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"series", "--n", "8"}, {"verify", "--scope", "golden", "--format", "json"},
        {"stats", "--n", "5"}, {"histogram", "--n", "4"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
