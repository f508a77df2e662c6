#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace parabolic;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "parabolic-avoid");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  auto r = invoke({"count", "--l", "2", "--m", "2", "--n", "4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"] == "20");
  CHECK(json::parse(invoke({"count", "--l", "1", "--m", "2", "--n", "5"}).out)["value"] == "16");
  CHECK(json::parse(invoke({"count", "--l", "1", "--m", "1", "--n", "7"}).out)["value"] == "1");

  r = invoke({"count", "--l", "2", "--m", "3", "--a", "4", "--n", "8", "--method", "both"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["agree"] == true);
  CHECK(doc["recurrence"] == doc["brute_force"]);

  CHECK(invoke({"count", "--l", "2", "--m", "2", "--n", "4", "--format", "bfile"}).out == "4 20\n");
  CHECK(invoke({"count", "--l", "2", "--m", "2", "--n", "4", "--format", "csv"}).out ==
        "l,m,a,n,value,method\n2,2,0,4,20,recurrence\n");
}

TEST_CASE("argument errors exit nonzero") {
  CHECK(invoke({"count", "--l", "0", "--m", "2", "--n", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"count", "--l", "2", "--m", "2", "--a", "4", "--n", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"count", "--l", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--suite", "nonsense"}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  auto r = invoke({"count", "--l", "2", "--m", "2", "--n", "13", "--method", "brute"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("ceiling") != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("series in each format") {
  CHECK(invoke({"series", "--l", "2", "--m", "2", "--N", "6", "--format", "bfile"}).out ==
        "0 1\n1 1\n2 2\n3 6\n4 20\n5 68\n6 232\n");
  const auto doc = json::parse(invoke({"series", "--l", "1", "--m", "1", "--N", "3"}).out);
  CHECK(doc["coefficients"] == json::array({"1", "1", "1", "1"}));
  CHECK(invoke({"series", "--l", "1", "--m", "3", "--N", "5", "--format", "csv"}).out ==
        "n,value\n0,1\n1,1\n2,2\n3,6\n4,18\n5,54\n");
}

TEST_CASE("b-file output round-trips") {
  const auto r = invoke({"series", "--l", "3", "--m", "2", "--N", "30", "--format", "bfile"});
  const auto parsed = cli::parse_bfile(r.out);
  CHECK(parsed.size() == 31);
  CHECK(cli::format_bfile(parsed) == r.out);
  const auto doc = json::parse(invoke({"series", "--l", "3", "--m", "2", "--N", "30"}).out);
  for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(to_string(parsed[i]) == doc["coefficients"][i]);
  CHECK_THROWS_AS(cli::parse_bfile("0 1\n2 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_bfile("0\n"), std::invalid_argument);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args{"verify", "--suite", "main_theorem", "--k-max", "4", "--n-max", "6"};
  CHECK(invoke(args).out == invoke(args).out);
  const auto path = std::filesystem::temp_directory_path() / "parabolic_series.b";
  auto r = invoke({"series", "--l", "2", "--m", "2", "--N", "6", "--format", "bfile", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "0 1\n1 1\n2 2\n3 6\n4 20\n5 68\n6 232\n");
  std::filesystem::remove(path);
}

TEST_CASE("enumerate streams one permutation per line") {
  const auto r = invoke({"enumerate", "--l", "1", "--m", "2", "--a", "0", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 1 3\n2 3 1\n3 1 2\n3 2 1\n");
  CHECK(invoke({"enumerate", "--l", "1", "--m", "2", "--n", "3", "--no-prune"}).out == r.out);
}

TEST_CASE("verify suites pass and report") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "lemma26", "--s-max", "8"},
           {"verify", "--suite", "rook_laguerre", "--s-max", "8"},
           {"verify", "--suite", "a_independence", "--k-max", "4", "--n-max", "7"},
           {"verify", "--suite", "main_theorem", "--k-max", "4", "--n-max", "7"},
           {"verify", "--suite", "lemma22", "--k-max", "4", "--n-max", "6"},
           {"verify", "--suite", "theorem23", "--k-max", "4", "--n-max", "7"},
           {"verify", "--suite", "lemma24", "--k-max", "4", "--n-max", "7"},
           {"verify", "--suite", "theorem25", "--k-max", "4", "--n-max", "7"},
           {"verify", "--suite", "bdpp", "--k-max", "5", "--n-max", "8"}}) {
    CAPTURE(args[2]);
    const auto r = invoke(args);
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["failed"] == 0);
    CHECK(doc["cases"].size() > 0);
    std::vector<std::string> keys;
    for (const auto& c : doc["cases"]) keys.push_back(c["key"]);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
  }
}

TEST_CASE("verify refuses sweeps above the ceiling") {
  CHECK(invoke({"verify", "--suite", "main_theorem", "--n-max", "9", "--ceiling", "8"}).code == cli::kExitUsage);
  ::setenv("PARABOLIC_AVOID_BF_CEILING", "6", 1);
  CHECK(cli::resolve_ceiling(0) == 6);
  CHECK(cli::resolve_ceiling(9) == 9);
  CHECK(invoke({"verify", "--suite", "a_independence", "--k-max", "3", "--n-max", "7"}).code == cli::kExitUsage);
  ::setenv("PARABOLIC_AVOID_BF_CEILING", "bogus", 1);
  CHECK_THROWS_AS(cli::resolve_ceiling(0), std::invalid_argument);
  ::unsetenv("PARABOLIC_AVOID_BF_CEILING");
  CHECK(cli::resolve_ceiling(0) == 12);
}

TEST_CASE("asympt and bdpp") {
  auto r = invoke({"asympt", "--l", "2", "--m", "2"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["gamma"].get<double>() == doctest::Approx(3.414213562).epsilon(1e-9));
  CHECK(doc["il_bound"].get<double>() == doctest::Approx(4.2360679775).epsilon(1e-9));
  CHECK(doc["denominator_sign_change"] == true);
  CHECK(invoke({"asympt", "--l", "2", "--m", "2", "--format", "bfile"}).code == cli::kExitUsage);
  CHECK(invoke({"asympt", "--l", "2", "--m", "2", "--tol", "1/1000"}).code == 0);

  r = invoke({"bdpp", "--k", "3", "--N", "8"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["first_agreement_index"] == 2);
  CHECK(doc["coefficients"][8] == "1430");
  CHECK(doc["brute_force"][8] == "1430");
}
