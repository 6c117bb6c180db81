#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ohno/cli.hpp"
#include "ohno/error.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ohno::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--index", "1,2", "--tol", "1e-12"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1.202056903159594", 0) == 0);
  r = run({"eval", "--expr", "(3) - (1,2)"});
  CHECK(r.code == 0);
  CHECK(std::abs(std::stod(r.out)) <= 1e-12);
  r = run({"eval", "--index", "2", "--kernel", "scalar", "--cache", "off"});
  CHECK(r.out == "1.644934066848226\n");
}

TEST_CASE("expand, dual, ohno, list") {
  auto r = run({"expand", "--expr", "(2)#(3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(2,3) + (3,2)\n");
  r = run({"dual", "--index", "2,3"});
  CHECK(r.out == "1,2,2\n");
  r = run({"dual", "--expr", "2*(3) - (1,2)"});
  CHECK(r.out == "-(3) + 2*(1,2)\n");
  r = run({"ohno", "--expr", "(1,2)", "--m", "1", "--symbolic"});
  CHECK(r.out == "m=1\t(1,3) + (2,2)\n");
  r = run({"ohno", "--index", "3", "--M", "2"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  CHECK(r.out.rfind("m=0\t(3)\t1.20205690315959", 0) == 0);
  r = run({"list"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 16);
}

TEST_CASE("verify writes reports and a summary") {
  const auto json_path = temp("ohno_cli_report.json");
  auto r = run({"verify", "--name", "main", "--s", "2..3", "--t", "2..3", "--l", "0..1", "--m", "0..1", "--tol",
                "1e-10", "--out", json_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("main [numeric]: PASS") != std::string::npos);
  std::ifstream in(json_path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["pass"] == true);
  CHECK(doc["points"].size() == 16);
  std::filesystem::remove(json_path);

  const auto csv_path = temp("ohno_cli_report.csv");
  r = run({"verify", "--name", "add1", "--s", "2..3", "--l", "1..2", "--m", "0..2", "--out", csv_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("[exact-symbolic]: PASS") != std::string::npos);
  std::ifstream csv(csv_path);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "identity,params,residual,tol,pass,evals,elapsed_ms");
  std::filesystem::remove(csv_path);
}

TEST_CASE("verify output is deterministic across job counts") {
  auto a = run({"verify", "--name", "hmos", "--s", "2..4", "--t", "2..4", "--M", "2", "--jobs", "1"});
  auto b = run({"verify", "--name", "hmos", "--s", "2..4", "--t", "2..4", "--M", "2", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cache file persists between runs") {
  const auto path = temp("ohno_cli_cache.tsv");
  std::filesystem::remove(path);
  auto r = run({"eval", "--index", "2,3", "--cache", path.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(path));
  auto again = run({"eval", "--index", "2,3", "--cache", path.string()});
  CHECK(again.out == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("exit code matrix") {
  const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
      {{"list"}, 0},
      {{"eval", "--index", "3"}, 0},
      {{"verify", "--name", "duality", "--weight", "2..4"}, 0},
      {{"verify", "--name", "add2", "--s", "2", "--l", "1", "--m", "0"}, 0},
      // failures: refused points fail the run
      {{"verify", "--name", "lemma_oooo", "--s", "2", "--t", "3", "--l", "0", "--m", "1"}, 1},
      // evaluation budget exhausted
      {{"eval", "--index", "3", "--terms-cap", "10"}, 1},
      {{"eval", "--index", "3", "--tol", "1e-17"}, 1},
      // usage errors
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"eval"}, 2},
      {{"eval", "--index", "2,1"}, 2},
      {{"eval", "--index", "3", "--expr", "(3)"}, 2},
      {{"eval", "--expr", "(1,"}, 2},
      {{"eval", "--index", "3", "--tol", "abc"}, 2},
      {{"eval", "--index", "3", "--kernel", "neon"}, 2},
      {{"eval", "--index", "3", "--precision-bits", "32"}, 2},
      {{"expand"}, 2},
      {{"ohno", "--index", "3"}, 2},
      {{"verify", "--name", "unknown"}, 2},
      {{"verify", "--name", "hmos", "--s", "3..2"}, 2},
      {{"verify", "--name", "hmos", "--format", "xml", "--out", "x.xml"}, 2},
  };
  for (const auto& [args, code] : matrix) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    CHECK(run(args).code == code);
  }
}

TEST_CASE("usage errors print the grammar and flag reference") {
  auto r = run({"eval", "--expr", "(1,"});
  CHECK(r.err.find("column 4") != std::string::npos);
  CHECK(r.err.find("Expression grammar") != std::string::npos);
  r = run({"bogus"});
  CHECK(r.err.find("--help") != std::string::npos);
  CHECK(r.err.find("Expression grammar") != std::string::npos);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("ranges") {
  CHECK(ohno::cli::parse_range("3") == std::vector<int>{3});
  CHECK(ohno::cli::parse_range("2..4") == std::vector<int>{2, 3, 4});
  CHECK(ohno::cli::parse_range("1..2,5") == std::vector<int>{1, 2, 5});
  CHECK_THROWS_AS((void)ohno::cli::parse_range("4..2"), ohno::ConfigError);
  CHECK_THROWS_AS((void)ohno::cli::parse_range("a"), ohno::ConfigError);
}
