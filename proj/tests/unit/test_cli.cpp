#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlat/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "divlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = divlat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string output_value(const json& report, const std::string& name) {
  for (const auto& o : report["outputs"])
    if (o["name"] == name) return o["value"].get<std::string>();
  return "<missing>";
}

} // namespace

TEST_CASE("closure") {
  auto r = run({"closure", "--backend", "ratval", "--element", "(1/2)"});
  CHECK(r.code == divlat::cli::kOk);
  CHECK(contains(r.out, "a_v: [1/2]"));
  CHECK(contains(r.out, "divisorial: false"));

  r = run({"closure", "--backend", "numsg", "--element", "1*<2,3>", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(output_value(j, "a_v") == "1*<1>");
  CHECK(output_value(j, "divisorial") == "false");
}

TEST_CASE("residual, aofp and localize") {
  auto r = run({"residual", "--backend", "dedekind-int", "--y", "12", "--x", "8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, ": 3"));
  r = run({"aofp", "--backend", "dedekind-int", "--element", "12", "--prime", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "a(p): 3"));
  CHECK(contains(r.out, "below p: false"));
  r = run({"localize", "--backend", "dedekind-int", "--element", "12", "--prime", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "x_p: 3"));
  r = run({"localize", "--backend", "ex17", "--element", "a m", "--prime", "m", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(output_value(json::parse(r.out), "x_p") == "a m");
}

TEST_CASE("analyze ratval") {
  const auto r = run({"analyze", "--backend", "ratval", "--max-num", "4", "--max-den", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "valuation: yes (global)"));
  CHECK(contains(r.out, "divisorial: NO (witness \"(0)\", \"1\")"));
  CHECK(contains(r.out, "dedekind: NO"));
  CHECK(contains(r.out, "implications: yes"));
}

TEST_CASE("JSON report fields") {
  const auto r = run({"analyze", "--backend", "ex17", "--max-deg", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  std::set<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"command", "backend", "inputs", "outputs", "verdicts", "exit_code"});
  CHECK(j["command"] == "analyze");
  CHECK(j["backend"] == "ex17");
  CHECK(j["exit_code"] == 0);
  CHECK(j["verdicts"].size() == 9);
  for (const auto& v : j["verdicts"]) {
    CHECK(v.contains("name"));
    CHECK(v.contains("status"));
    CHECK(v["witnesses"].is_array());
  }
}

TEST_CASE("generate lists the frame") {
  const auto r = run({"generate", "--backend", "dvr-chain", "--max-exp", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  std::vector<std::string> names;
  const auto j = json::parse(r.out);
  for (const auto& o : j["outputs"]) names.push_back(o["value"].get<std::string>());
  CHECK(names == std::vector<std::string>{"0", "1", "m^1", "m^2", "m^3"});
}

TEST_CASE("suite writes certificates") {
  const auto path = std::filesystem::temp_directory_path() / "divlat_test_cli_certs.json";
  const auto r = run({"suite", "--ids", "lemma2,theorem11", "--backends", "dvr-chain,ratval", "--max-num", "3",
                      "--max-den", "2", "--out", path.string()});
  CHECK(r.code == divlat::cli::kOk);
  CHECK(contains(r.out, "theorem11/ratval"));
  std::ifstream in(path);
  const auto certs = json::parse(in);
  CHECK(certs.size() == 4);
  CHECK(certs[0]["suite"] == "lemma2");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == divlat::cli::kUsage);
  CHECK(run({"closure", "--backend", "zz", "--element", "5"}).code == divlat::cli::kUsage);
  CHECK(run({"closure", "--backend", "dedekind-int"}).code == divlat::cli::kUsage);
  CHECK(run({"closure", "--backend", "dedekind-int", "--element", "-3"}).code == divlat::cli::kUsage);
  CHECK(run({"localize", "--backend", "dedekind-int", "--element", "12", "--prime", "4"}).code == divlat::cli::kUsage);
  CHECK(run({"suite", "--ids", "nope"}).code == divlat::cli::kUsage);
  CHECK(run({"closure", "--backend", "dedekind-int", "--max-int", "0", "--element", "3"}).code ==
        divlat::cli::kUsage);

  const auto r = run({"closure", "--backend", "dedekind-int", "--element", "500"});
  CHECK(r.code == divlat::cli::kFrameInsufficient);
  CHECK(contains(r.err, "frame insufficient"));
  CHECK(run({"closure", "--backend", "dedekind-int", "--element", "500", "--max-int", "1000"}).code ==
        divlat::cli::kOk);
  CHECK(run({"closure", "--backend", "dedekind-int", "--element", "12", "--format", "json"}).code == divlat::cli::kOk);
}
