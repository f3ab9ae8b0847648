#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "niven/cli.hpp"
#include "niven/cyclotomic.hpp"

using namespace niven;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, PsiTable& table = PsiTable::shared()) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, table);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path golden(const std::string& name) { return std::filesystem::path(NIVEN_GOLDEN_DIR) / name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("niven_test_" + name);
}

}  // namespace

TEST_CASE("simple commands") {
  CHECK(run({"bound", "1"}).out == "22\n");
  CHECK(run({"psi", "15"}).out.find("x^4 - x^3 - 4x^2 + 4x + 1") != std::string::npos);
  CHECK(run({"cyclotomic", "12"}).out.find("x^4 - x^2 + 1") != std::string::npos);
  CHECK(run({"iterate", "2"}).out.find("x^4 - 4x^2 + 2") != std::string::npos);
  CHECK(run({"factor", "--poly", "2,-1,-4,0,1"}).out.find("(x - 2)(x + 1)(x^2 + x - 1)") != std::string::npos);
  CHECK(run({"dynatomic", "2", "--c", "1/4"}).out.find("x^2 + x + 5/4") != std::string::npos);
  const auto fi = run({"factor-iterate", "4"});
  CHECK(fi.code == 0);
  CHECK(fi.out.find("x^8 + x^7 - 7x^6 - 6x^5 + 15x^4 + 10x^3 - 10x^2 - 4x + 1") != std::string::npos);
}

TEST_CASE("classify 1 as JSON") {
  const auto r = run({"classify", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == cli::kSchemaVersion);
  CHECK(j["command"] == "classify");
  CHECK(j["results"]["values"].size() == 5);
  CHECK(j["results"]["edges"].size() == 5);
  CHECK(j["results"]["bound"] == "22");
}

TEST_CASE("global options before or after the subcommand") {
  CHECK(run({"--json", "bound", "2"}).out == run({"bound", "2", "--json"}).out);
  CHECK(run({"--seed", "7", "factor", "--poly", "1,0,1"}).code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "3", "--json"},
           {"classify", "4"},
           {"membership", "--poly", "1,-3,0,1", "--json"},
           {"factor", "--poly", "576,0,-960,0,352,0,-40,0,1", "--seed", "42", "--json"},
           {"factor-iterate", "6", "--json"},
           {"verify", "4"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const auto p1 = temp_file("det1.dot"), p2 = temp_file("det2.dot");
  run({"classify", "3", "--dot", p1.string()});
  run({"classify", "3", "--dot", p2.string()});
  CHECK(slurp(p1) == slurp(p2));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("distinct exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"nonsense"}).code == cli::kUsage);
  CHECK(run({"psi", "0"}).code == cli::kUsage);
  CHECK(run({"psi", "abc"}).code == cli::kUsage);
  CHECK(run({"classify", "1", "--angles", "deg"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"dynatomic", "3", "--c", "1/0"}).code == cli::kDomain);
  CHECK(run({"dynatomic", "3", "--c", "x"}).code == cli::kDomain);
  CHECK(run({"factor", "--poly", "1,,2"}).code == cli::kDomain);
  CHECK(run({"membership", "--poly", "-1,0,1"}).code == cli::kDomain);
  CHECK(run({"membership", "--poly", "1,0,2"}).code == cli::kDomain);
  CHECK(run({"iterate", "25"}).code == cli::kCapExceeded);
  CHECK(run({"dynatomic", "13"}).code == cli::kCapExceeded);
  CHECK(run({"--max-n", "13", "dynatomic", "13"}).code == cli::kOk);
  CHECK(run({"factor", "--poly", "1,0,0,0,0,1", "--max-degree", "4"}).code == cli::kCapExceeded);
  CHECK(run({"--factor-cap", "8", "factor-iterate", "9"}).code == cli::kCapExceeded);
  const auto err = run({"membership", "--poly", "-1,0,1"}).err;
  CHECK(err.find('\n') == err.size() - 1);
}

TEST_CASE("verify passes and detects a corrupted table") {
  CHECK(run({"verify", "1"}).code == cli::kOk);
  const auto r = run({"verify"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  PsiTable bad;
  bad.overwrite_psi_for_testing(7, IntPoly{-1, -2, 1, 2});
  const auto broken = run({"verify", "3"}, bad);
  CHECK(broken.code == cli::kVerifyFailed);
  CHECK(broken.out.find("FAIL") != std::string::npos);
}

TEST_CASE("golden files") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"classify", "1"}, "classify_1.txt"},
      {{"classify", "1", "--json"}, "classify_1.json"},
      {{"classify", "2"}, "classify_2.txt"},
      {{"classify", "2", "--json"}, "classify_2.json"},
      {{"membership", "--poly", "-1,-1,1"}, "membership_golden.txt"},
      {{"membership", "--poly", "-1,-1,1", "--json"}, "membership_golden.json"},
      {{"factor-iterate", "5"}, "factor_iterate_5.txt"},
  };
  for (const auto& [args, file] : cases) {
    INFO(file);
    CHECK(run(args).out == slurp(golden(file)));
  }
  for (const auto& [d, file] : std::vector<std::pair<std::string, std::string>>{{"1", "classify_1.dot"},
                                                                               {"2", "classify_2.dot"}}) {
    const auto p = temp_file(file);
    REQUIRE(run({"classify", d, "--dot", p.string()}).code == 0);
    CHECK(slurp(p) == slurp(golden(file)));
    std::filesystem::remove(p);
  }
}
