#include "backend_impl.hpp"

#include <bit>
#include <cctype>

namespace divlat::detail {
namespace {

constexpr BackendDescriptor kDescriptor{
    BackendId::Ex17, "ex17", true, false, false,
    "ideal lattice of Z[sqrt(-3)] localized at (2, 1+sqrt(-3)): 1 > m > a,b,c > am > a^2,ab,ac > ..."};

using Kind = Ex17Element::Kind;
constexpr std::uint8_t kAllTags = 0b111;

// A nonzero element viewed as a v-ideal of the monoid of principal elements:
// all monomials of degree > min_degree, plus the monomials of degree
// min_degree whose tag lies in `tags`. The top is (0, {0}).
struct Profile {
  std::uint32_t min_degree;
  std::uint8_t tags;
};

Profile profile(const Ex17Element& e) {
  switch (e.kind) {
  case Kind::Top: return {0, 0b001};
  case Kind::Principal: return {e.degree, static_cast<std::uint8_t>(1u << e.tag)};
  case Kind::MLevel: return {e.degree + 1, kAllTags};
  case Kind::Bottom: break;
  }
  throw Error("ex17: bottom has no profile");
}

// Two tags at one degree close up to all three (their v-closure is a^(n-1) m).
Ex17Element from_profile(Profile p) {
  if (p.min_degree == 0) return Ex17Element::top();
  if (std::popcount(p.tags) == 1) return Ex17Element::principal(p.min_degree, static_cast<std::uint8_t>(std::countr_zero(p.tags)));
  return Ex17Element::m_level(p.min_degree - 1);
}

std::uint8_t shift_tags(std::uint8_t tags, unsigned by) {
  std::uint8_t out = 0;
  for (unsigned t = 0; t < 3; ++t)
    if (tags & (1u << t)) out |= static_cast<std::uint8_t>(1u << ((t + by) % 3));
  return out;
}

std::uint8_t sum_tags(std::uint8_t a, std::uint8_t b) {
  std::uint8_t out = 0;
  for (unsigned t = 0; t < 3; ++t)
    if (a & (1u << t)) out |= shift_tags(b, t);
  return out;
}

class Ex17 final : public TypedLattice<Ex17Element> {
public:
  const BackendDescriptor& descriptor() const override { return kDescriptor; }
  Element bottom() const override { return Ex17Element::bottom(); }
  Element top() const override { return Ex17Element::top(); }

  bool leq(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.kind == Kind::Bottom) return true;
    if (b.kind == Kind::Bottom) return false;
    const auto pa = profile(a);
    const auto pb = profile(b);
    if (pb.min_degree == 0) return true;
    if (pa.min_degree != pb.min_degree) return pa.min_degree > pb.min_degree;
    return (pa.tags & ~pb.tags) == 0;
  }

  Element mul(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.kind == Kind::Bottom || b.kind == Kind::Bottom) return bottom();
    const auto pa = profile(a);
    const auto pb = profile(b);
    return from_profile({pa.min_degree + pb.min_degree, sum_tags(pa.tags, pb.tags)});
  }

  Element join(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.kind == Kind::Bottom) return b;
    if (b.kind == Kind::Bottom) return a;
    const auto pa = profile(a);
    const auto pb = profile(b);
    if (pa.min_degree != pb.min_degree) return pa.min_degree < pb.min_degree ? a : b;
    return from_profile({pa.min_degree, static_cast<std::uint8_t>(pa.tags | pb.tags)});
  }

  Element meet(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.kind == Kind::Bottom || b.kind == Kind::Bottom) return bottom();
    const auto pa = profile(a);
    const auto pb = profile(b);
    if (pa.min_degree != pb.min_degree) return pa.min_degree > pb.min_degree ? a : b;
    const auto common = static_cast<std::uint8_t>(pa.tags & pb.tags);
    if (common == 0) return Ex17Element::m_level(pa.min_degree);
    return from_profile({pa.min_degree, common});
  }

  // (y : x) collects the monomials z with z * x inside y: every degree above
  // deg(y) - deg(x), plus the tags at that degree that translate x's tags into y's.
  Element residual(const Element& y, const Element& x) const override {
    const auto& target = get(y);
    const auto& divisor = get(x);
    if (divisor.kind == Kind::Bottom) return top();
    if (target.kind == Kind::Bottom) return bottom();
    const auto pt = profile(target);
    const auto pd = profile(divisor);
    if (pt.min_degree < pd.min_degree) return top();
    const auto d = pt.min_degree - pd.min_degree;
    std::uint8_t valid = 0;
    for (unsigned s = 0; s < 3; ++s)
      if ((shift_tags(pd.tags, s) & ~pt.tags) == 0) valid |= static_cast<std::uint8_t>(1u << s);
    if (d == 0) valid &= 0b001;
    if (valid == 0) return Ex17Element::m_level(d);
    return from_profile({d, valid});
  }

  bool is_principal(const Element& x) const override { return get(x).kind != Kind::MLevel; }
  bool is_compact(const Element& x) const override {
    get(x);
    return true;
  }
  bool is_prime(const Element& p) const override {
    const auto& e = get(p);
    return e.kind == Kind::Bottom || e == Ex17Element::m_level(0);
  }
  bool is_maximal(const Element& p) const override { return get(p) == Ex17Element::m_level(0); }
  std::vector<Element> maximals_above(const Element& a) const override {
    if (get(a).kind == Kind::Top) return {};
    return {Ex17Element::m_level(0)};
  }

  Element localize(const Element& x, const Element& p) const override {
    get(x);
    if (!is_prime(p)) not_prime(p);
    if (p == bottom()) return x == bottom() ? bottom() : top();
    return x;
  }

  // Ordered by rank: m, a, b, c, am, a^2, ab, ac, ... up to degree max_deg;
  // m-levels a^k m stop at k = max_deg - 1 so each has principal elements below it.
  std::vector<Element> enumerate(const SampleFrame& frame) const override {
    std::vector<Element> out{bottom(), top()};
    const auto deg = static_cast<std::uint32_t>(frame.max_deg);
    for (std::uint32_t n = 1; n <= deg; ++n) {
      out.push_back(Ex17Element::m_level(n - 1));
      for (std::uint8_t t = 0; t < 3; ++t) out.push_back(Ex17Element::principal(n, t));
    }
    return out;
  }

  // Literals are products of the factors a, b, c, m with optional exponents.
  Element parse(std::string_view literal) const override {
    auto s = trim(literal);
    if (s == "0") return bottom();
    if (s == "1") return top();
    if (s.empty()) throw ParseError("empty ex17 literal");
    std::uint64_t degree = 0;
    unsigned tag = 0;
    std::uint64_t m_count = 0;
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (c == ' ' || c == '*' || c == '\t') {
        ++i;
        continue;
      }
      if (c != 'a' && c != 'b' && c != 'c' && c != 'm')
        throw ParseError("unexpected '" + std::string(1, c) + "' in ex17 literal '" + std::string(literal) + "'");
      ++i;
      std::uint64_t e = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t j = ++i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        e = parse_decimal(s.substr(i, j - i), "exponent");
        i = j;
      }
      if (c == 'm') {
        m_count += e;
      } else {
        degree += e;
        tag += static_cast<unsigned>((c == 'b' ? 1 : c == 'c' ? 2 : 0) * (e % 3));
      }
    }
    if (m_count > 0) return Ex17Element::m_level(static_cast<std::uint32_t>(degree + m_count - 1));
    if (degree == 0) return top();
    return Ex17Element::principal(static_cast<std::uint32_t>(degree), static_cast<std::uint8_t>(tag % 3));
  }

  std::string print(const Element& x) const override {
    const auto& e = get(x);
    auto a_power = [](std::uint32_t k) -> std::string {
      if (k == 0) return "";
      if (k == 1) return "a";
      return "a^" + std::to_string(k);
    };
    switch (e.kind) {
    case Kind::Bottom: return "0";
    case Kind::Top: return "1";
    case Kind::MLevel: return e.degree == 0 ? "m" : a_power(e.degree) + " m";
    case Kind::Principal: {
      if (e.tag == 0) return a_power(e.degree);
      const std::string letter = e.tag == 1 ? "b" : "c";
      return e.degree == 1 ? letter : a_power(e.degree - 1) + " " + letter;
    }
    }
    return "?";
  }
};

} // namespace

const Lattice& ex17_lattice() {
  static const Ex17 instance;
  return instance;
}

} // namespace divlat::detail
