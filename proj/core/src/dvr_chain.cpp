#include "backend_impl.hpp"

#include <algorithm>

namespace divlat::detail {
namespace {

constexpr BackendDescriptor kDescriptor{BackendId::DvrChain, "dvr-chain", true, true, true,
                                        "ideals m^k of a discrete valuation ring"};

// Exponent of the zero ideal is treated as +infinity.
class DvrChain final : public TypedLattice<DvrChainElement> {
public:
  const BackendDescriptor& descriptor() const override { return kDescriptor; }
  Element bottom() const override { return DvrChainElement::bottom(); }
  Element top() const override { return DvrChainElement::power(0); }

  bool leq(const Element& x, const Element& y) const override {
    const auto& a = get(x).exponent;
    const auto& b = get(y).exponent;
    if (!a) return true;
    if (!b) return false;
    return *a >= *b;
  }

  Element mul(const Element& x, const Element& y) const override {
    const auto& a = get(x).exponent;
    const auto& b = get(y).exponent;
    if (!a || !b) return bottom();
    return DvrChainElement::power(checked_add(*a, *b));
  }

  Element join(const Element& x, const Element& y) const override { return leq(x, y) ? y : x; }
  Element meet(const Element& x, const Element& y) const override { return leq(x, y) ? x : y; }

  Element residual(const Element& y, const Element& x) const override {
    const auto& b = get(y).exponent;
    const auto& a = get(x).exponent;
    if (!a) return top();
    if (!b) return bottom();
    return DvrChainElement::power(*b > *a ? *b - *a : 0);
  }

  bool is_principal(const Element& x) const override {
    get(x);
    return true;
  }
  bool is_compact(const Element& x) const override {
    get(x);
    return true;
  }
  bool is_prime(const Element& p) const override {
    const auto& e = get(p).exponent;
    return !e || *e == 1;
  }
  bool is_maximal(const Element& p) const override {
    const auto& e = get(p).exponent;
    return e && *e == 1;
  }
  std::vector<Element> maximals_above(const Element& a) const override {
    if (get(a) == DvrChainElement::power(0)) return {};
    return {DvrChainElement::power(1)};
  }

  Element localize(const Element& x, const Element& p) const override {
    get(x);
    if (!is_prime(p)) not_prime(p);
    if (p == bottom()) return x == bottom() ? bottom() : top();
    return x;
  }

  std::vector<Element> enumerate(const SampleFrame& frame) const override {
    std::vector<Element> out{bottom()};
    for (std::uint64_t k = 0; k <= frame.max_exp; ++k) out.push_back(DvrChainElement::power(k));
    return out;
  }

  Element parse(std::string_view literal) const override {
    auto s = trim(literal);
    if (s == "0") return bottom();
    if (s == "1") return top();
    if (s == "m") return DvrChainElement::power(1);
    if (s.size() > 2 && s.substr(0, 2) == "m^") {
      auto k = parse_decimal(s.substr(2), "exponent");
      if (k == 0) throw ParseError("dvr-chain exponent must be >= 1 (use \"1\" for the top)");
      return DvrChainElement::power(k);
    }
    throw ParseError("dvr-chain literal must be 0, 1 or m^k, got '" + std::string(literal) + "'");
  }

  std::string print(const Element& x) const override {
    const auto& e = get(x).exponent;
    if (!e) return "0";
    if (*e == 0) return "1";
    return "m^" + std::to_string(*e);
  }
};

} // namespace

const Lattice& dvr_chain_lattice() {
  static const DvrChain instance;
  return instance;
}

} // namespace divlat::detail
