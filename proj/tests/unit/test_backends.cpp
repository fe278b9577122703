#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlat/lattice.hpp"
#include "divlat/oracles.hpp"

#include <numeric>
#include <string>
#include <vector>

using namespace divlat;

namespace {

const Lattice& dvr() { return lattice(BackendId::DvrChain); }
const Lattice& zz() { return lattice(BackendId::DedekindInt); }
const Lattice& ratval() { return lattice(BackendId::RatVal); }
const Lattice& numsg() { return lattice(BackendId::NumSg); }
const Lattice& ex17() { return lattice(BackendId::Ex17); }

enum class Op { Leq, Mul, Join, Meet, Residual };

// Values first computed with the brute-force models and then frozen.
struct Frozen {
  BackendId backend;
  Op op;
  const char* x;
  const char* y;
  const char* expected;
};

const std::vector<Frozen>& frozen_table() {
  static const std::vector<Frozen> table{
      {BackendId::DedekindInt, Op::Residual, "12", "8", "3"},
      {BackendId::DedekindInt, Op::Residual, "24", "12", "2"},
      {BackendId::RatVal, Op::Leq, "(1/2)", "[1/2]", "true"},
      {BackendId::RatVal, Op::Residual, "[3/2]", "(1/2)", "[1]"},
      {BackendId::RatVal, Op::Residual, "[1/3]", "(1/2)", "1"},
      {BackendId::RatVal, Op::Residual, "(1)", "(1/2)", "[1/2]"},
      {BackendId::RatVal, Op::Residual, "[1]", "[1/3]", "[2/3]"},
      {BackendId::RatVal, Op::Residual, "[1]", "(0)", "[1]"},
      {BackendId::RatVal, Op::Mul, "(0)", "(0)", "(0)"},
      {BackendId::RatVal, Op::Mul, "(1/2)", "[1/3]", "(5/6)"},
      {BackendId::NumSg, Op::Residual, "2*<1>", "1*<2,3>", "2*<1>"},
      {BackendId::NumSg, Op::Residual, "2*<1>", "2*<1>", "1*<1>"},
      {BackendId::NumSg, Op::Residual, "1*<2,3>", "1*<3,4,5>", "1*<1>"},
      {BackendId::NumSg, Op::Residual, "1*<3,4,5>", "1*<2,3>", "1*<2,3>"},
      {BackendId::NumSg, Op::Residual, "1*<2,3>", "1*<2,3>", "1*<1>"},
      {BackendId::NumSg, Op::Mul, "1*<2,3>", "1*<2,3>", "1*<4,6,9>"},
      {BackendId::NumSg, Op::Mul, "2*<1>", "3*<1>", "6*<1>"},
      {BackendId::NumSg, Op::Join, "2*<1>", "3*<1>", "1*<2,3>"},
      {BackendId::NumSg, Op::Join, "4*<1>", "6*<1>", "2*<2,3>"},
      {BackendId::NumSg, Op::Meet, "2*<1>", "3*<1>", "6*<1>"},
      {BackendId::NumSg, Op::Meet, "1*<2,3>", "1*<3,4,5>", "1*<3,4,5>"},
      {BackendId::NumSg, Op::Leq, "2*<1>", "1*<2,3>", "true"},
      {BackendId::NumSg, Op::Leq, "1*<1>", "1*<2,3>", "false"},
      {BackendId::Ex17, Op::Join, "a", "b", "m"},
      {BackendId::Ex17, Op::Meet, "a", "b", "a m"},
      {BackendId::Ex17, Op::Meet, "a^2", "a b", "a^2 m"},
      {BackendId::Ex17, Op::Join, "a^2", "a b", "a m"},
      {BackendId::Ex17, Op::Meet, "a m", "b", "a m"},
      {BackendId::Ex17, Op::Residual, "a", "m", "m"},
      {BackendId::Ex17, Op::Residual, "a^2", "b", "c"},
      {BackendId::Ex17, Op::Residual, "a^2", "a", "a"},
      {BackendId::Ex17, Op::Residual, "a m", "m", "m"},
      {BackendId::Ex17, Op::Residual, "a m", "a", "m"},
      {BackendId::Ex17, Op::Residual, "a^2", "m", "a m"},
      {BackendId::Ex17, Op::Mul, "m", "m", "a m"},
      {BackendId::Ex17, Op::Mul, "b", "m", "a m"},
      {BackendId::Ex17, Op::Mul, "b", "b", "a c"},
      {BackendId::Ex17, Op::Leq, "a^2", "m", "true"},
      {BackendId::Ex17, Op::Leq, "a m", "b", "true"},
      {BackendId::Ex17, Op::Leq, "a^2", "a m", "true"},
  };
  return table;
}

std::string apply(const Lattice& L, Op op, const Element& x, const Element& y) {
  switch (op) {
  case Op::Leq: return L.leq(x, y) ? "true" : "false";
  case Op::Mul: return L.print(L.mul(x, y));
  case Op::Join: return L.print(L.join(x, y));
  case Op::Meet: return L.print(L.meet(x, y));
  case Op::Residual: return L.print(L.residual(x, y));
  }
  return {};
}

std::string apply(const Lattice& L, const BruteForceModel& M, Op op, const Element& x, const Element& y) {
  switch (op) {
  case Op::Leq: return M.leq(x, y) ? "true" : "false";
  case Op::Mul: return L.print(M.mul(x, y));
  case Op::Join: return L.print(M.join(x, y));
  case Op::Meet: return L.print(M.meet(x, y));
  case Op::Residual: return L.print(M.residual(x, y));
  }
  return {};
}

SampleFrame small_frame() {
  SampleFrame f;
  f.max_exp = 10;
  f.max_int = 30;
  f.max_num = 3;
  f.max_den = 3;
  f.max_frob = 7;
  f.max_scale = 2;
  f.max_deg = 4;
  return f;
}

} // namespace

TEST_CASE("frozen values match the closed forms and the brute-force models") {
  for (const auto& row : frozen_table()) {
    const auto& L = lattice(row.backend);
    const auto model = brute_force_model(row.backend, oracle_frame());
    const auto x = L.parse(row.x);
    const auto y = L.parse(row.y);
    CAPTURE(L.name());
    CAPTURE(row.x);
    CAPTURE(row.y);
    CHECK(apply(L, row.op, x, y) == row.expected);
    CHECK(apply(L, *model, row.op, x, y) == row.expected);
  }
}

TEST_CASE("oracle_check on small frames") {
  for (auto id : kAllBackends) {
    CAPTURE(backend_name(id));
    CHECK(oracle_check(lattice(id), small_frame()).holds());
  }
}

TEST_CASE("dvr-chain") {
  const auto& L = dvr();
  CHECK(L.top() == L.parse("1"));
  CHECK(L.print(L.top()) == "1");
  CHECK(L.print(L.bottom()) == "0");
  CHECK(L.parse("m") == L.parse("m^1"));
  CHECK(L.mul(L.parse("m^4"), L.bottom()) == L.bottom());
  CHECK(L.residual(L.parse("m^5"), L.parse("m^2")) == L.parse("m^3"));
  const auto elems = L.enumerate(small_frame());
  for (const auto& x : elems) {
    CHECK(L.is_principal(x));
    for (const auto& y : elems) CHECK((L.leq(x, y) || L.leq(y, x)));
  }
  CHECK(L.is_maximal(L.parse("m")));
  CHECK(L.is_principal(L.parse("m")));
  CHECK(L.descriptor().valuation);
  CHECK(L.descriptor().local);
}

TEST_CASE("dedekind-int") {
  const auto& L = zz();
  for (std::uint64_t x = 1; x <= 30; ++x)
    for (std::uint64_t y = 1; y <= 30; ++y) {
      const Element ex = DedekindIntElement{x};
      const Element ey = DedekindIntElement{y};
      CHECK(L.mul(ex, ey) == Element(DedekindIntElement{x * y}));
      CHECK(L.join(ex, ey) == Element(DedekindIntElement{std::gcd(x, y)}));
      CHECK(L.meet(ex, ey) == Element(DedekindIntElement{std::lcm(x, y)}));
      CHECK(L.residual(ey, ex) == Element(DedekindIntElement{y / std::gcd(x, y)}));
    }
  auto names = [&](const Element& a) {
    std::vector<std::string> out;
    for (const auto& p : L.maximals_above(a)) out.push_back(L.print(p));
    return out;
  };
  CHECK(names(L.parse("360")) == std::vector<std::string>{"2", "3", "5"});
  CHECK(names(L.parse("1")).empty());
  CHECK(names(L.parse("97")) == std::vector<std::string>{"97"});
  CHECK(L.is_prime(L.parse("7")));
  CHECK_FALSE(L.is_prime(L.parse("9")));
  CHECK_FALSE(L.is_prime(L.parse("1")));
  CHECK(L.descriptor().dedekind);
}

TEST_CASE("ratval") {
  const auto& L = ratval();
  const auto m = L.parse("(0)");
  CHECK(L.top() == L.parse("[0]"));
  CHECK(L.print(L.top()) == "1");
  CHECK(L.mul(m, m) == m);
  CHECK(L.is_maximal(m));
  CHECK_FALSE(L.is_principal(m));
  CHECK(L.parse("[2/4]") == L.parse("[1/2]"));
  CHECK(L.print(L.parse("[6/4]")) == "[3/2]");
  const auto elems = L.enumerate(small_frame());
  for (const auto& x : elems) {
    const auto& e = x.as<RatValElement>();
    const bool closed = e.kind == RatValElement::Kind::Closed;
    CHECK(L.is_principal(x) == (closed || x == L.bottom()));
    if (closed) CHECK(L.residual(x, m) == x);
  }
  // residual(closed r, open q) = closed max(r - q, 0)
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const auto& r = x.as<RatValElement>();
      const auto& q = y.as<RatValElement>();
      if (r.kind != RatValElement::Kind::Closed || q.kind != RatValElement::Kind::Open) continue;
      const Rational d = r.value - q.value;
      const Rational expected = d < Rational(0) ? Rational(0) : d;
      CHECK(L.residual(x, y) == Element(RatValElement::closed(expected)));
    }
}

TEST_CASE("numsg") {
  const auto& L = numsg();
  const auto m = L.parse("1*<2,3>");
  CHECK(L.is_maximal(m));
  CHECK(L.maximals_above(L.parse("5*<1>")) == std::vector<Element>{m});
  CHECK(L.print(L.top()) == "1*<1>");
  CHECK(L.parse("3*<1,5>") == L.parse("3*<1>"));
  CHECK(L.print(L.parse("2*<5,3>")) == "2*<3,5>");
  CHECK(L.is_prime(L.parse("5*<1>")));
  CHECK_FALSE(L.is_prime(L.parse("6*<1>")));
  CHECK_FALSE(L.is_maximal(L.parse("5*<1>")));
  for (const auto& x : L.enumerate(small_frame())) {
    const auto& e = x.as<NumSgElement>();
    CHECK(L.is_principal(x) == (e.scale == 0 || e.semigroup.is_whole()));
    if (x != L.top()) CHECK(L.leq(x, m));
  }
}

TEST_CASE("ex17 normal forms and relations") {
  const auto& L = ex17();
  const auto p = [&](const char* s) { return L.parse(s); };
  CHECK(p("b^2") == p("a c"));
  CHECK(p("c^2") == p("a b"));
  CHECK(p("b c") == p("a^2"));
  CHECK(p("c m") == p("a m"));
  CHECK(p("m^2") == p("a m"));
  CHECK(L.print(p("a^3 b")) == "a^3 b");
  CHECK(L.mul(p("a"), p("a")) == L.mul(p("b"), p("c")));
  CHECK(L.mul(p("b"), p("b")) == L.mul(p("a"), p("c")));
  CHECK(L.mul(p("c"), p("c")) == L.mul(p("a"), p("b")));
  CHECK(L.mul(p("m"), p("m")) == L.mul(p("a"), p("m")));
  CHECK(L.mul(p("b"), p("m")) == L.mul(p("a"), p("m")));
  CHECK(L.mul(p("c"), p("m")) == L.mul(p("a"), p("m")));
}

TEST_CASE("ex17 tag arithmetic is the cyclic group of order 3") {
  for (std::uint8_t s = 0; s < 3; ++s)
    for (std::uint8_t t = 0; t < 3; ++t) {
      const Element x = Ex17Element::principal(1, s);
      const Element y = Ex17Element::principal(2, t);
      const auto& prod = ex17().mul(x, y).as<Ex17Element>();
      CHECK(prod.degree == 3);
      CHECK(prod.tag == (s + t) % 3);
      CHECK(ex17().mul(x, y) == ex17().mul(y, x));
    }
}

TEST_CASE("ex17 rank function") {
  const auto& L = ex17();
  auto rank = [](const Element& x) -> int {
    const auto& e = x.as<Ex17Element>();
    switch (e.kind) {
    case Ex17Element::Kind::Top: return 0;
    case Ex17Element::Kind::MLevel: return 2 * static_cast<int>(e.degree) + 1;
    case Ex17Element::Kind::Principal: return 2 * static_cast<int>(e.degree);
    default: return 1000;
    }
  };
  const auto elems = L.enumerate(small_frame());
  for (const auto& x : elems) {
    const auto& e = x.as<Ex17Element>();
    CHECK(L.is_principal(x) == (e.kind != Ex17Element::Kind::MLevel));
    for (const auto& y : elems) {
      if (x == y) continue;
      if (L.lt(x, y)) CHECK(rank(x) > rank(y));
      if (rank(x) > rank(y)) CHECK(L.lt(x, y));
      if (rank(x) == rank(y)) CHECK_FALSE(L.leq(x, y));
    }
  }
}

TEST_CASE("ex17 join and meet of distinct same-degree principals") {
  const auto& L = ex17();
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint8_t s = 0; s < 3; ++s)
      for (std::uint8_t t = 0; t < 3; ++t) {
        if (s == t) continue;
        const Element x = Ex17Element::principal(n, s);
        const Element y = Ex17Element::principal(n, t);
        CHECK(L.join(x, y) == Element(Ex17Element::m_level(n - 1)));
        CHECK(L.meet(x, y) == Element(Ex17Element::m_level(n)));
      }
}

TEST_CASE("print then parse is the identity on frames") {
  for (auto id : kAllBackends) {
    const auto& L = lattice(id);
    for (const auto& x : L.enumerate(small_frame())) CHECK(L.parse(L.print(x)) == x);
  }
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(dvr().parse("m^0"), ParseError);
  CHECK_THROWS_AS(dvr().parse("x"), ParseError);
  CHECK_THROWS_AS(zz().parse("-3"), ParseError);
  CHECK_THROWS_AS(zz().parse(""), ParseError);
  CHECK_THROWS_AS(ratval().parse("[-1]"), ParseError);
  CHECK_THROWS_AS(ratval().parse("[1/0]"), ParseError);
  CHECK_THROWS_AS(ratval().parse("1/2"), ParseError);
  CHECK_THROWS_AS(numsg().parse("1*<4,6>"), ParseError);
  CHECK_THROWS_AS(numsg().parse("0*<1>"), ParseError);
  CHECK_THROWS_AS(numsg().parse("1*<>"), ParseError);
  CHECK_THROWS_AS(numsg().parse("<2,3>"), ParseError);
  CHECK_THROWS_AS(ex17().parse("d"), ParseError);
  CHECK_THROWS_AS(ex17().parse("a^-1"), ParseError);
}
