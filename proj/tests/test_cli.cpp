#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nichols/cli.hpp"

using namespace nichols;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  static const std::string cache = (std::filesystem::temp_directory_path() / "nichols-cli-test").string();
  args.insert(args.begin(), "nichols");
  args.push_back("--cache-dir");
  args.push_back(cache);
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group") {
  auto r = run({"group", "A2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::map<std::string, std::string> kv;
  for (const auto& row : j["rows"]) kv[row["property"]] = row["value"];
  // [DERIVED] |W| = 6, exponents 1,2, |R+| = 3, one orbit
  CHECK(kv["order"] == "6");
  CHECK(kv["exponents"] == "1,2");
  CHECK(kv["positive_roots"] == "3");
  CHECK(kv["orbits"] == "1");
  auto b2 = run({"group", "--group", "B2", "--format", "tsv"});
  CHECK(b2.out.find("orbits\t2") != std::string::npos);
  CHECK(b2.out.rfind("property\tvalue\n", 0) == 0);
  auto i27 = run({"group", "I2:7"});
  CHECK(i27.out.find("14") != std::string::npos);
}

TEST_CASE("matrix file input") {
  const auto path = std::filesystem::temp_directory_path() / "nichols-b3.txt";
  {
    std::ofstream f(path);
    f << "rank: 3\nmatrix:\n1 4 2\n4 1 3\n2 3 1\n";
  }
  auto r = run({"group", "--matrix-file", path.string(), "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order\t48") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"group", "Q7"}).code == 2);
  CHECK(run({"verify", "nonsense", "A2"}).code == 2);
  CHECK(run({"group", "A2", "--format", "yaml"}).code == 2);
  auto budget = run({"hilbert", "A3", "--budget", "100", "--max-degree", "4"});
  CHECK(budget.code == 3);
  CHECK(budget.err.find("budget") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("hilbert") {
  auto r = run({"hilbert", "A2", "--quadratic", "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2\t4\t4\ttrue") != std::string::npos);
  auto b2 = run({"hilbert", "B2", "--format", "json"});
  CHECK(nlohmann::json::parse(b2.out)["total"] == 64);
}

TEST_CASE("verify and suite") {
  CHECK(run({"verify", "paths", "--m", "5"}).code == 0);
  auto g2 = run({"verify", "bracket", "G2", "--format", "json"});
  CHECK(g2.code == 0);
  auto j = nlohmann::json::parse(g2.out);
  CHECK(j[0]["status"] == "pass");
  CHECK(run({"verify", "duality", "A2"}).code == 0);
  CHECK(run({"verify", "subalgebra", "B2", "--coeffs", "0,1"}).code == 0);
  // a real failure: B2 is not quadratic
  CHECK(run({"verify", "quadratic", "B2", "--max-degree", "4"}).code == 1);
  auto suite = run({"suite", "A2", "--format", "tsv", "--threads", "1"});
  CHECK(suite.code == 0);
  CHECK(suite.out.rfind("check\tgroup\tstatus", 0) == 0);
}

TEST_CASE("schubert, pairing and cache") {
  auto s = run({"schubert", "A1", "--format", "tsv"});
  CHECK(s.code == 0);
  CHECK(s.out.find("e\t0\t(1)") != std::string::npos);
  CHECK(s.out.find("(1/2)*a1") != std::string::npos);
  auto p = run({"pairing", "A2", "--phi", "1,2", "--x", "2,1", "--format", "json"});
  CHECK(p.code == 0);
  auto rows = nlohmann::json::parse(p.out)["rows"];
  CHECK(rows.size() == 3);
  CHECK(rows[0]["value"] == rows[1]["value"]);
  CHECK(rows[1]["value"] == rows[2]["value"]);
  CHECK(run({"cache", "list"}).code == 0);
  CHECK(run({"cache", "clear"}).code == 0);
  CHECK(run({"cache", "bogus"}).code == 2);
}
