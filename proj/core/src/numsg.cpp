#include "backend_impl.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace divlat::detail {
namespace {

constexpr BackendDescriptor kDescriptor{BackendId::NumSg, "numsg", true, false, false,
                                        "ideal lattice of the semiring N: scaled numerical semigroups"};

const std::vector<NumericalSemigroup>& semigroups_up_to(std::uint64_t max_frobenius) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<NumericalSemigroup>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(max_frobenius);
  if (it == cache.end()) it = cache.emplace(max_frobenius, NumericalSemigroup::with_frobenius_at_most(max_frobenius)).first;
  return it->second;
}

NumericalSemigroup ordinary_23() {
  static const NumericalSemigroup s = NumericalSemigroup::from_gaps({1});
  return s;
}

// Ideals of (N, +, *) are the additive submonoids of N: 0 or d*S with S numerical.
class NumSg final : public TypedLattice<NumSgElement> {
public:
  const BackendDescriptor& descriptor() const override { return kDescriptor; }
  Element bottom() const override { return NumSgElement::bottom(); }
  Element top() const override { return NumSgElement::principal(1); }

  bool leq(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.scale == 0) return true;
    if (b.scale == 0 || a.scale % b.scale != 0) return false;
    const auto ratio = a.scale / b.scale;
    const auto c = b.semigroup.conductor();
    for (std::uint64_t s = 0; s < c; ++s)
      if (a.semigroup.contains(s) && !b.semigroup.contains(ratio * s)) return false;
    return true;
  }

  // The product ideal is generated by the products of generators.
  Element mul(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.scale == 0 || b.scale == 0) return bottom();
    const auto& ga = a.semigroup.minimal_generators();
    const auto& gb = b.semigroup.minimal_generators();
    std::vector<std::uint64_t> gens;
    gens.reserve(ga.size() * gb.size());
    for (auto g : ga)
      for (auto h : gb) gens.push_back(g * h);
    return NumSgElement{checked_mul(a.scale, b.scale), NumericalSemigroup::from_generators(gens)};
  }

  Element join(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.scale == 0) return b;
    if (b.scale == 0) return a;
    const auto g = std::gcd(a.scale, b.scale);
    std::vector<std::uint64_t> gens;
    for (auto s : a.semigroup.minimal_generators()) gens.push_back(a.scale / g * s);
    for (auto s : b.semigroup.minimal_generators()) gens.push_back(b.scale / g * s);
    return NumSgElement{g, NumericalSemigroup::from_generators(gens)};
  }

  Element meet(const Element& x, const Element& y) const override {
    const auto& a = get(x);
    const auto& b = get(y);
    if (a.scale == 0 || b.scale == 0) return bottom();
    const auto l = std::lcm(a.scale, b.scale);
    const auto ka = l / a.scale;
    const auto kb = l / b.scale;
    const auto bound = std::max(a.semigroup.conductor(), b.semigroup.conductor());
    auto t = NumericalSemigroup::from_membership(
        [&](std::uint64_t n) { return a.semigroup.contains(ka * n) && b.semigroup.contains(kb * n); }, bound);
    return NumSgElement{l, std::move(t)};
  }

  // (dS : d'S') = e * {b : b k S' within S}, e = d/g, k = d'/g, g = gcd(d, d').
  Element residual(const Element& y, const Element& x) const override {
    const auto& target = get(y);
    const auto& divisor = get(x);
    if (divisor.scale == 0) return top();
    if (target.scale == 0) return bottom();
    const auto g = std::gcd(target.scale, divisor.scale);
    const auto e = target.scale / g;
    const auto k = divisor.scale / g;
    const auto& gens = divisor.semigroup.minimal_generators();
    auto r = NumericalSemigroup::from_membership(
        [&](std::uint64_t n) {
          for (auto t : gens)
            if (!target.semigroup.contains(n * k * t)) return false;
          return true;
        },
        target.semigroup.conductor());
    return NumSgElement{e, std::move(r)};
  }

  bool is_principal(const Element& x) const override {
    const auto& a = get(x);
    return a.scale == 0 || a.semigroup.is_whole();
  }
  bool is_compact(const Element& x) const override {
    get(x);
    return true;
  }
  // Nonzero primes: pN for prime p, and the maximal ideal N \ {1}.
  bool is_prime(const Element& p) const override {
    const auto& a = get(p);
    if (a.scale == 0) return true;
    if (a.semigroup.is_whole()) {
      if (a.scale < 2) return false;
      for (std::uint64_t d = 2; d * d <= a.scale; ++d)
        if (a.scale % d == 0) return false;
      return true;
    }
    return a.scale == 1 && a.semigroup == ordinary_23();
  }
  bool is_maximal(const Element& p) const override {
    const auto& a = get(p);
    return a.scale == 1 && a.semigroup == ordinary_23();
  }
  std::vector<Element> maximals_above(const Element& a) const override {
    if (get(a) == NumSgElement::principal(1)) return {};
    return {maximal()};
  }

  // Localizing at qN keeps the q-part of the scale; at the maximal ideal it is the identity.
  Element localize(const Element& x, const Element& p) const override {
    const auto& a = get(x);
    if (!is_prime(p)) not_prime(p);
    const auto& prime = get(p);
    if (prime.scale == 0) return a.scale == 0 ? bottom() : top();
    if (!prime.semigroup.is_whole()) return x;
    if (a.scale == 0) return bottom();
    std::uint64_t power = 1;
    auto d = a.scale;
    while (d % prime.scale == 0) {
      d /= prime.scale;
      power *= prime.scale;
    }
    return NumSgElement::principal(power);
  }

  // 0, then the principal ideals nN for n <= s(F+2) (so every frame element
  // has at least two principal elements below it), then d*S for proper S.
  std::vector<Element> enumerate(const SampleFrame& frame) const override {
    std::vector<Element> out = principals(frame);
    out.insert(out.begin(), bottom());
    for (std::uint64_t d = 1; d <= frame.max_scale; ++d)
      for (const auto& s : semigroups_up_to(frame.max_frob))
        if (!s.is_whole()) out.push_back(NumSgElement{d, s});
    return out;
  }

  std::vector<Element> enumerate_principals(const SampleFrame& frame) const override { return principals(frame); }

  Element parse(std::string_view literal) const override {
    auto s = trim(literal);
    if (s == "0") return bottom();
    const auto star = s.find('*');
    if (star == std::string_view::npos || s.size() < star + 3 || s[star + 1] != '<' || s.back() != '>')
      throw ParseError("numsg literal must be 0 or d*<g1,...>, got '" + std::string(literal) + "'");
    const auto d = parse_decimal(trim(s.substr(0, star)), "scale");
    if (d == 0) throw ParseError("numsg scale must be >= 1");
    auto body = s.substr(star + 2, s.size() - star - 3);
    std::vector<std::uint64_t> gens;
    while (!body.empty()) {
      const auto comma = body.find(',');
      gens.push_back(parse_decimal(trim(body.substr(0, comma)), "generator"));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    try {
      return NumSgElement{d, NumericalSemigroup::from_generators(gens)};
    } catch (const std::invalid_argument&) {
      throw ParseError("numsg generators must be positive with gcd 1, got '" + std::string(literal) + "'");
    }
  }

  std::string print(const Element& x) const override {
    const auto& a = get(x);
    if (a.scale == 0) return "0";
    std::string out = std::to_string(a.scale) + "*<";
    bool first = true;
    for (auto g : a.semigroup.minimal_generators()) {
      if (!first) out += ",";
      out += std::to_string(g);
      first = false;
    }
    return out + ">";
  }

private:
  static Element maximal() { return NumSgElement{1, ordinary_23()}; }

  static std::vector<Element> principals(const SampleFrame& frame) {
    std::vector<Element> out;
    const auto limit = frame.max_scale * (frame.max_frob + 2);
    for (std::uint64_t n = 1; n <= limit; ++n) out.push_back(NumSgElement::principal(n));
    return out;
  }
};

} // namespace

const Lattice& numsg_lattice() {
  static const NumSg instance;
  return instance;
}

} // namespace divlat::detail
