#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlat/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace divlat;
using nlohmann::json;

namespace {

SampleFrame small_frame() {
  SampleFrame f;
  f.max_exp = 8;
  f.max_int = 40;
  f.max_num = 3;
  f.max_den = 2;
  f.max_frob = 5;
  f.max_scale = 2;
  f.max_deg = 4;
  return f;
}

} // namespace

TEST_CASE("registry covers every suite id and each one runs") {
  const std::set<std::string> expected{
      "axioms",      "lemma2",    "prop81",    "remark3",       "lemma4",    "prop12",
      "theorem5",    "theorem11", "theorem8",  "lemma9",        "cic-theorem", "lemma14",
      "theorem10",   "example15", "example-numsg", "example17", "localization-rules"};
  std::set<std::string> ids;
  for (const auto& e : suite_registry()) {
    ids.emplace(e.id);
    CHECK_FALSE(e.statement.empty());
  }
  CHECK(ids == expected);
  CHECK(suite_registry().size() == expected.size());
  for (const auto& e : suite_registry())
    for (auto id : kAllBackends) {
      CAPTURE(e.id);
      CAPTURE(backend_name(id));
      CHECK_NOTHROW(run_check(e.id, lattice(id), small_frame()));
    }
  CHECK_THROWS_AS(run_check("lemma99", lattice(BackendId::DvrChain), small_frame()), ParseError);
}

TEST_CASE("suite id and backend lists") {
  CHECK(parse_suite_ids("all").size() == suite_registry().size());
  CHECK(parse_suite_ids("lemma2,prop81") == std::vector<std::string>{"lemma2", "prop81"});
  CHECK(parse_suite_ids(" lemma2 ") == std::vector<std::string>{"lemma2"});
  CHECK_THROWS_AS(parse_suite_ids("lemma2,nope"), ParseError);
  CHECK_THROWS_AS(parse_suite_ids(""), ParseError);

  CHECK(parse_backends("all") == std::vector<BackendId>(kAllBackends.begin(), kAllBackends.end()));
  CHECK(parse_backends("ex17,dvr-chain,ex17") == std::vector<BackendId>{BackendId::DvrChain, BackendId::Ex17});
  CHECK_THROWS_AS(parse_backends("z"), ParseError);
  CHECK_THROWS_AS(parse_backends(""), ParseError);
}

TEST_CASE("certificate JSON has exactly the documented fields") {
  SuiteSpec spec{{"lemma2"}, {BackendId::RatVal}, small_frame(), true};
  const auto certs = run_suite(spec);
  REQUIRE(certs.size() == 1);
  const auto j = json::parse(to_json(certs.front()));
  std::set<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"suite", "backend", "frame", "status", "witnesses", "checked_count", "millis",
                                      "version"});
  CHECK(j["suite"] == "lemma2");
  CHECK(j["backend"] == "ratval");
  CHECK(j["status"] == "holds-on-frame");
  CHECK(j["witnesses"].is_array());
  CHECK(j["checked_count"].get<std::uint64_t>() > 0);
  CHECK(j["version"] == std::string(toolkit_version()));
  CHECK(j["frame"]["max_num"] == 3);
  CHECK(j["frame"]["tuple_budget"] == 1'000'000);
  CHECK(json::parse(frame_to_json(small_frame())) == j["frame"]);

  const auto arr = to_json(certs);
  CHECK(arr.back() == '\n');
  CHECK(json::parse(arr).size() == 1);
}

TEST_CASE("failing certificates carry printed witnesses and replay") {
  SuiteSpec spec{{"prop81", "axioms"}, {BackendId::DedekindInt, BackendId::NumSg}, small_frame(), true};
  auto certs = run_suite(spec);
  REQUIRE(certs.size() == 4);
  CHECK_FALSE(suite_failed(certs));
  for (const auto& c : certs) CHECK(replay(c));

  Certificate forged = certs.front();
  forged.status = Status::Fails;
  forged.witnesses = {"12"};
  CHECK_FALSE(replay(forged));
  certs.push_back(forged);
  CHECK(suite_failed(certs));

  // is_divisorial fails on ratval with a replayable witness pair via theorem11.
  SuiteSpec r{{"theorem11"}, {BackendId::RatVal}, small_frame(), true};
  const auto rc = run_suite(r);
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].witnesses.size() == 2);
  CHECK(replay(rc[0]));
}

TEST_CASE("run_suite is ordered and deterministic") {
  SuiteSpec spec{{"theorem8", "lemma14", "example15"},
                 {BackendId::Ex17, BackendId::DvrChain, BackendId::RatVal},
                 small_frame(),
                 true};
  const auto a = run_suite(spec);
  const auto b = run_suite(spec);
  REQUIRE(a.size() == 9);
  CHECK(std::is_sorted(a.begin(), a.end(), [](const Certificate& x, const Certificate& y) {
    return std::tie(x.suite, x.backend) < std::tie(y.suite, y.backend);
  }));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].suite == b[i].suite);
    CHECK(a[i].backend == b[i].backend);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].witnesses == b[i].witnesses);
    CHECK(a[i].checked_count == b[i].checked_count);
  }
}

TEST_CASE("expected outcomes of gated statements") {
  const auto f = small_frame();
  for (auto id : {BackendId::DvrChain, BackendId::DedekindInt, BackendId::Ex17})
    CHECK(run_check("theorem11", lattice(id), f).holds());
  CHECK(run_check("lemma14", lattice(BackendId::RatVal), f).holds());
  CHECK(run_check("lemma14", lattice(BackendId::DvrChain), f).holds());
  SampleFrame d6 = f;
  d6.max_deg = 6;
  CHECK(run_check("example15", lattice(BackendId::Ex17), d6).holds());
  CHECK(run_check("example17", lattice(BackendId::Ex17), d6).holds());
  CHECK(run_check("example-numsg", lattice(BackendId::NumSg), f).holds());
  CHECK(run_check("example15", lattice(BackendId::DvrChain), f).status == Status::HypothesisFailed);
}

TEST_CASE("no statement is refuted on any backend") {
  SuiteSpec spec{parse_suite_ids("all"), parse_backends("all"), small_frame(), true};
  const auto certs = run_suite(spec);
  CHECK(certs.size() == suite_registry().size() * kAllBackends.size());
  for (const auto& c : certs) {
    CAPTURE(c.suite);
    CAPTURE(backend_name(c.backend));
    CHECK(c.status != Status::Fails);
    CHECK(c.status != Status::FrameInsufficient);
  }
}
