#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlat/lattice.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace divlat;

namespace {

const Lattice& dvr() { return lattice(BackendId::DvrChain); }
const Lattice& zz() { return lattice(BackendId::DedekindInt); }
const Lattice& ratval() { return lattice(BackendId::RatVal); }
const Lattice& numsg() { return lattice(BackendId::NumSg); }
const Lattice& ex17() { return lattice(BackendId::Ex17); }

SampleFrame small_frame() {
  SampleFrame f;
  f.max_exp = 8;
  f.max_int = 40;
  f.max_num = 3;
  f.max_den = 3;
  f.max_frob = 7;
  f.max_scale = 2;
  f.max_deg = 4;
  return f;
}

std::vector<std::string> printed(const Lattice& L, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(L.print(x));
  return out;
}

} // namespace

TEST_CASE("backend names round-trip") {
  for (auto id : kAllBackends) CHECK(backend_from_name(backend_name(id)) == id);
  CHECK_THROWS_AS(backend_from_name("zz"), ParseError);
  for (auto id : kAllBackends) CHECK(lattice(id).id() == id);
}

TEST_CASE("leq examples") {
  CHECK(zz().leq(zz().parse("12"), zz().parse("3")));
  CHECK_FALSE(zz().leq(zz().parse("3"), zz().parse("12")));
  CHECK(ratval().leq(ratval().parse("(1/2)"), ratval().parse("[1/2]")));
  CHECK_FALSE(ratval().leq(ratval().parse("[1/2]"), ratval().parse("(1/2)")));
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    for (const auto& x : L.enumerate(small_frame())) {
      CHECK(L.leq(L.bottom(), x));
      CHECK(L.leq(x, L.top()));
    }
  }
}

TEST_CASE("mul examples") {
  CHECK(zz().mul(zz().parse("4"), zz().parse("6")) == zz().parse("24"));
  CHECK(dvr().mul(dvr().parse("m^2"), dvr().parse("m^3")) == dvr().parse("m^5"));
  CHECK(ex17().mul(ex17().parse("b"), ex17().parse("c")) == ex17().parse("a^2"));
}

TEST_CASE("join and meet examples") {
  const std::vector<Element> four_six{zz().parse("4"), zz().parse("6")};
  CHECK(zz().join(four_six) == zz().parse("2"));
  CHECK(zz().meet(four_six) == zz().parse("12"));
  const std::vector<Element> ab{ex17().parse("a"), ex17().parse("b")};
  CHECK(ex17().join(ab) == ex17().parse("m"));
  CHECK(ex17().meet(ab) == ex17().parse("a m"));
  const std::vector<Element> cuts{ratval().parse("[1]"), ratval().parse("[2]")};
  CHECK(ratval().meet(cuts) == ratval().parse("[2]"));
}

TEST_CASE("empty join is 0 and empty meet is 1") {
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    CHECK(L.join(std::span<const Element>{}) == L.bottom());
    CHECK(L.meet(std::span<const Element>{}) == L.top());
  }
}

TEST_CASE("residual examples and corners") {
  CHECK(zz().residual(zz().parse("12"), zz().parse("8")) == zz().parse("3"));
  CHECK(dvr().residual(dvr().parse("m^2"), dvr().parse("m^5")) == dvr().top());
  CHECK(ex17().residual(ex17().parse("a"), ex17().parse("m")) == ex17().parse("m"));
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    for (const auto& y : L.enumerate(small_frame())) {
      CHECK(L.residual(y, L.bottom()) == L.top());
      CHECK(L.residual(y, L.top()) == y);
    }
  }
}

TEST_CASE("is_principal examples") {
  for (const auto& n : zz().enumerate(small_frame())) CHECK(zz().is_principal(n));
  CHECK_FALSE(ex17().is_principal(ex17().parse("m")));
  CHECK(ex17().is_principal(ex17().parse("a^2 b")));
  CHECK_FALSE(numsg().is_principal(numsg().parse("1*<2,3>")));
}

TEST_CASE("check_principal_definition") {
  SampleFrame f = small_frame();
  f.max_exp = 10;
  CHECK(check_principal_definition(dvr(), dvr().parse("m"), f).holds());

  f.max_deg = 4;
  const auto v = check_principal_definition(ex17(), ex17().parse("m"), f);
  CHECK(v.failed());
  REQUIRE(v.witness.size() == 3);
  CHECK(v.witness[0] == ex17().parse("m"));
  CHECK_FALSE(principal_identities_hold(ex17(), v.witness[0], v.witness[1], v.witness[2]));

  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    CHECK(check_principal_definition(L, L.top(), small_frame()).holds());
  }
}

TEST_CASE("is_principal agrees with the definitional check") {
  SampleFrame f = small_frame();
  f.max_frob = 5;
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    const auto elems = L.enumerate(f);
    for (const auto& x : thin_for_arity(elems, 1, 40)) {
      CAPTURE(L.print(x));
      CHECK(check_principal_definition(L, x, f).holds() == L.is_principal(x));
    }
  }
}

TEST_CASE("principal_below") {
  SampleFrame f;
  f.max_int = 50;
  CHECK(printed(zz(), principal_below(zz(), zz().parse("6"), f)) ==
        std::vector<std::string>{"6", "12", "18", "24", "30", "36", "42", "48"});

  f.max_frob = 10;
  f.max_scale = 1;
  const auto below = principal_below(numsg(), numsg().parse("1*<2,3>"), f);
  const auto principals = numsg().enumerate_principals(f);
  REQUIRE(below.size() + 1 == principals.size());
  CHECK(below.front() == numsg().parse("2*<1>"));
  for (const auto& x : below) CHECK(x != numsg().top());

  f.max_deg = 2;
  CHECK(printed(ex17(), principal_below(ex17(), ex17().parse("m"), f)) ==
        std::vector<std::string>{"a", "b", "c", "a^2", "a b", "a c"});

  CHECK(principal_below(zz(), zz().bottom(), f).empty());
  SampleFrame tiny;
  tiny.max_int = 5;
  CHECK_THROWS_AS(principal_below(zz(), zz().parse("7"), tiny), FrameInsufficient);
}

TEST_CASE("primes, maximals and maximals_above") {
  CHECK(printed(zz(), zz().maximals_above(zz().parse("12"))) == std::vector<std::string>{"2", "3"});
  CHECK(numsg().is_maximal(numsg().parse("1*<2,3>")));
  CHECK(ratval().is_prime(ratval().parse("(0)")));
  CHECK(ratval().is_maximal(ratval().parse("(0)")));
  CHECK_THROWS_AS(zz().maximals_above(zz().bottom()), Unsupported);
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    CHECK(L.is_prime(L.bottom()));
    for (const auto& x : L.enumerate(small_frame())) {
      if (L.is_maximal(x)) CHECK(L.is_prime(x));
      if (x == L.bottom()) continue;
      for (const auto& m : L.maximals_above(x)) {
        CHECK(L.is_maximal(m));
        CHECK(L.leq(x, m));
      }
    }
  }
}

TEST_CASE("operations reject elements of another backend") {
  const auto n = zz().parse("6");
  const auto e = dvr().parse("m^2");
  CHECK_THROWS_AS(zz().leq(n, e), BackendMismatch);
  CHECK_THROWS_AS(zz().mul(e, n), BackendMismatch);
  CHECK_THROWS_AS(dvr().residual(n, e), BackendMismatch);
  CHECK_THROWS_AS(dvr().print(n), BackendMismatch);
}

TEST_CASE("frame enumeration is finite, deterministic, duplicate-free and starts with 0, 1") {
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    const auto a = L.enumerate(small_frame());
    const auto b = L.enumerate(small_frame());
    CAPTURE(L.name());
    CHECK(a == b);
    REQUIRE(a.size() >= 2);
    CHECK(a[0] == L.bottom());
    CHECK(a[1] == L.top());
    CHECK(std::set<Element>(a.begin(), a.end()).size() == a.size());
  }
}

TEST_CASE("frames are monotone in their bounds") {
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    const auto small = L.enumerate(small_frame());
    const auto large = L.enumerate(small_frame().doubled());
    const std::set<Element> big(large.begin(), large.end());
    CAPTURE(L.name());
    for (const auto& x : small) CHECK(big.count(x) == 1);
  }
}

TEST_CASE("CI frame sizes") {
  const SampleFrame f;
  CHECK(dvr().enumerate(f).size() == 22);
  CHECK(zz().enumerate(f).size() == 201);
  CHECK(ratval().enumerate(f).size() == 78);
  CHECK(numsg().enumerate(f).size() == 2385);
  CHECK(ex17().enumerate(f).size() == 34);
}

TEST_CASE("thin_for_arity") {
  std::vector<Element> xs;
  for (std::uint64_t n = 0; n < 100; ++n) xs.push_back(DedekindIntElement{n});
  CHECK(thin_for_arity(xs, 2, 1'000'000) == xs);
  const auto t = thin_for_arity(xs, 2, 400);
  CHECK(t.size() == 20);
  CHECK(t[0] == xs[0]);
  CHECK(t[1] == xs[1]);
  CHECK(std::set<Element>(t.begin(), t.end()).size() == t.size());
  CHECK(thin_for_arity(xs, 3, 1000).size() == 10);
  CHECK(thin_for_arity(xs, 2, 400) == t);
}

TEST_CASE("Tally keeps the first failure") {
  Tally t;
  CHECK(t.check(true, {}, "unused"));
  CHECK_FALSE(t.check(false, {zz().parse("2")}, "first"));
  CHECK_FALSE(t.check(false, {zz().parse("3")}, "second"));
  const auto v = t.verdict("never");
  CHECK(v.failed());
  CHECK(v.checked_count == 3);
  CHECK(v.note == "first");
  CHECK(v.witness == std::vector<Element>{zz().parse("2")});
}

TEST_CASE("status names") {
  CHECK(status_name(Status::HoldsOnFrame) == "holds-on-frame");
  CHECK(status_name(Status::HoldsGlobally) == "holds-globally");
  CHECK(status_name(Status::Fails) == "fails");
  CHECK(status_name(Status::FrameInsufficient) == "frame-insufficient");
  CHECK(status_name(Status::HypothesisFailed) == "hypothesis-failed");
  CHECK(status_name(Status::ExpectedCounterexample) == "expected-counterexample");
}

TEST_CASE("axioms_suite examples") {
  SampleFrame f;
  f.max_int = 100;
  CHECK(axioms_suite(zz(), f).holds());
  f.max_deg = 6;
  CHECK(axioms_suite(ex17(), f).holds());
  CHECK(axioms_suite(dvr(), small_frame()).holds());
  CHECK(axioms_suite(ratval(), small_frame()).holds());
  CHECK(axioms_suite(numsg(), small_frame()).holds());
}
