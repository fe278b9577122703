#include "backend_impl.hpp"

#include <numeric>

namespace divlat::detail {
namespace {

constexpr BackendDescriptor kDescriptor{BackendId::DedekindInt, "dedekind-int", false, false, true,
                                        "ideal lattice of Z: nZ ordered by reverse divisibility"};

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

DedekindIntElement ideal(std::uint64_t n) { return {n}; }

class DedekindInt final : public TypedLattice<DedekindIntElement> {
public:
  const BackendDescriptor& descriptor() const override { return kDescriptor; }
  Element bottom() const override { return ideal(0); }
  Element top() const override { return ideal(1); }

  // xZ <= yZ iff y divides x.
  bool leq(const Element& x, const Element& y) const override {
    const auto a = get(x).n;
    const auto b = get(y).n;
    if (b == 0) return a == 0;
    return a % b == 0;
  }

  Element mul(const Element& x, const Element& y) const override { return ideal(checked_mul(get(x).n, get(y).n)); }
  Element join(const Element& x, const Element& y) const override { return ideal(std::gcd(get(x).n, get(y).n)); }

  Element meet(const Element& x, const Element& y) const override {
    const auto a = get(x).n;
    const auto b = get(y).n;
    if (a == 0 || b == 0) return bottom();
    return ideal(checked_mul(a / std::gcd(a, b), b));
  }

  Element residual(const Element& y, const Element& x) const override {
    const auto b = get(y).n;
    const auto a = get(x).n;
    if (a == 0) return top();
    if (b == 0) return bottom();
    return ideal(b / std::gcd(a, b));
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
    const auto n = get(p).n;
    return n == 0 || is_prime_number(n);
  }
  bool is_maximal(const Element& p) const override { return is_prime_number(get(p).n); }

  std::vector<Element> maximals_above(const Element& a) const override {
    auto n = get(a).n;
    if (n == 0) throw Unsupported("dedekind-int: infinitely many maximal elements lie above 0");
    std::vector<Element> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      out.push_back(ideal(p));
      while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(ideal(n));
    return out;
  }

  // x_p = p^{v_p(x)}.
  Element localize(const Element& x, const Element& p) const override {
    auto n = get(x).n;
    if (!is_prime(p)) not_prime(p);
    const auto q = get(p).n;
    if (q == 0) return n == 0 ? bottom() : top();
    if (n == 0) return bottom();
    std::uint64_t power = 1;
    while (n % q == 0) {
      n /= q;
      power *= q;
    }
    return ideal(power);
  }

  std::vector<Element> enumerate(const SampleFrame& frame) const override {
    std::vector<Element> out;
    out.reserve(frame.max_int + 1);
    out.push_back(bottom());
    out.push_back(top());
    for (std::uint64_t n = 2; n <= frame.max_int; ++n) out.push_back(ideal(n));
    return out;
  }

  Element parse(std::string_view literal) const override {
    return ideal(parse_decimal(trim(literal), "a non-negative integer"));
  }
  std::string print(const Element& x) const override { return std::to_string(get(x).n); }
};

} // namespace

const Lattice& dedekind_int_lattice() {
  static const DedekindInt instance;
  return instance;
}

} // namespace divlat::detail
