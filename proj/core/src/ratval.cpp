#include "backend_impl.hpp"

#include <algorithm>
#include <set>

namespace divlat::detail {
namespace {

constexpr BackendDescriptor kDescriptor{BackendId::RatVal, "ratval", true, true, false,
                                        "valuation ring with value group Q: closed and open value cuts"};

using Kind = RatValElement::Kind;

// boost::rational compared with a plain int recurses under C++20 rewritten operators.
const Rational kZero{0};

Rational positive_part(const Rational& q) { return q < kZero ? kZero : q; }

std::string print_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Ideals are value sets {v >= q} or {v > q}; the order is inclusion.
class RatVal final : public TypedLattice<RatValElement> {
public:
  const BackendDescriptor& descriptor() const override { return kDescriptor; }
  Element bottom() const override { return RatValElement::bottom(); }
  Element top() const override { return RatValElement::closed(0); }

  bool leq(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.kind == Kind::Bottom) return true;
    if (b.kind == Kind::Bottom) return false;
    // Only a closed cut sitting exactly at an open cut's value escapes it.
    if (a.kind == Kind::Closed && b.kind == Kind::Open) return a.value > b.value;
    return a.value >= b.value;
  }

  Element mul(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.kind == Kind::Bottom || b.kind == Kind::Bottom) return bottom();
    const auto kind = (a.kind == Kind::Closed && b.kind == Kind::Closed) ? Kind::Closed : Kind::Open;
    return RatValElement{kind, a.value + b.value};
  }

  Element join(const Element& x, const Element& y) const override { return leq(x, y) ? y : x; }
  Element meet(const Element& x, const Element& y) const override { return leq(x, y) ? x : y; }

  // {t : t + X within Y}.
  Element residual(const Element& y, const Element& x) const override {
    const auto& target = get(y);
    const auto& divisor = get(x);
    if (divisor.kind == Kind::Bottom) return top();
    if (target.kind == Kind::Bottom) return bottom();
    const Rational diff = target.value - divisor.value;
    if (target.kind == Kind::Open && divisor.kind == Kind::Closed) {
      if (diff < kZero) return top();
      return RatValElement::open(diff);
    }
    return RatValElement::closed(positive_part(diff));
  }

  bool is_principal(const Element& x) const override { return get(x).kind != Kind::Open; }
  bool is_compact(const Element& x) const override { return get(x).kind != Kind::Open; }
  bool is_prime(const Element& p) const override {
    const auto& e = get(p);
    return e.kind == Kind::Bottom || e == RatValElement::open(0);
  }
  bool is_maximal(const Element& p) const override { return get(p) == RatValElement::open(0); }
  std::vector<Element> maximals_above(const Element& a) const override {
    if (get(a) == RatValElement::closed(0)) return {};
    return {RatValElement::open(0)};
  }

  Element localize(const Element& x, const Element& p) const override {
    get(x);
    if (!is_prime(p)) not_prime(p);
    if (p == bottom()) return x == bottom() ? bottom() : top();
    return x;
  }

  // Values p/q with p <= max_num, q <= max_den. Closed cuts at every value;
  // open cuts at every value but the largest, so each open cut has a
  // principal element below it inside the frame.
  std::vector<Element> enumerate(const SampleFrame& frame) const override {
    std::set<Rational> values;
    for (std::int64_t q = 1; q <= static_cast<std::int64_t>(frame.max_den); ++q)
      for (std::int64_t p = 0; p <= static_cast<std::int64_t>(frame.max_num); ++p) values.insert(Rational(p, q));
    const Rational largest = *values.rbegin();
    std::vector<Element> out{bottom(), top()};
    for (const auto& v : values) {
      if (v != kZero) out.push_back(RatValElement::closed(v));
      if (v != largest) out.push_back(RatValElement::open(v));
    }
    return out;
  }

  Element parse(std::string_view literal) const override {
    auto s = trim(literal);
    if (s == "0") return bottom();
    if (s == "1") return top();
    if (s.size() >= 3 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')'))) {
      const bool closed = s.front() == '[';
      auto body = trim(s.substr(1, s.size() - 2));
      std::uint64_t num = 0;
      std::uint64_t den = 1;
      if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = parse_decimal(trim(body.substr(0, slash)), "cut numerator");
        den = parse_decimal(trim(body.substr(slash + 1)), "cut denominator");
        if (den == 0) throw ParseError("ratval cut has zero denominator");
      } else {
        num = parse_decimal(body, "cut value");
      }
      const Rational q(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
      return closed ? RatValElement::closed(q) : RatValElement::open(q);
    }
    throw ParseError("ratval literal must be 0, 1, [p/q] or (p/q), got '" + std::string(literal) + "'");
  }

  std::string print(const Element& x) const override {
    const auto& e = get(x);
    switch (e.kind) {
    case Kind::Bottom: return "0";
    case Kind::Closed: return e.value == kZero ? "1" : "[" + print_rational(e.value) + "]";
    case Kind::Open: return "(" + print_rational(e.value) + ")";
    }
    return "?";
  }
};

} // namespace

const Lattice& ratval_lattice() {
  static const RatVal instance;
  return instance;
}

} // namespace divlat::detail
