#include "divlat/oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

namespace divlat {
namespace {

// ---------------------------------------------------------------------------
// Dynamic bit set with the few word-level operations the grid models need.
class Bits {
public:
  explicit Bits(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return i < n_ && ((w_[i / 64] >> (i % 64)) & 1u); }
  void set(std::size_t i) {
    if (i < n_) w_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::optional<std::size_t> first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
    return std::nullopt;
  }
  // this |= other << shift (bits moving to higher indices)
  void or_shifted_up(const Bits& other, std::size_t shift) {
    for (std::size_t i = 0; i + shift < n_ && i < other.n_; ++i)
      if (other.test(i)) set(i + shift);
  }
  // this |= other >> shift
  void or_shifted_down(const Bits& other, std::size_t shift) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t lo = k + ws < other.w_.size() ? other.w_[k + ws] : 0;
      std::uint64_t hi = k + ws + 1 < other.w_.size() ? other.w_[k + ws + 1] : 0;
      w_[k] |= bs == 0 ? lo : (lo >> bs) | (hi << (64 - bs));
    }
    trim();
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] |= o.w_[k];
    return r;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  Bits complement() const {
    Bits r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

private:
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

// ---------------------------------------------------------------------------
// Ideals of a valuation ring as sets of values on a finite grid [0, range];
// every grid point above range is implicitly a member of a nonzero ideal.
// Residuals test candidates on a coarse sub-grid against every fine point,
// so an open cut is seen as dense relative to the candidates.
class GridModel : public BruteForceModel {
public:
  GridModel(std::size_t range, std::size_t coarse) : range_(range), coarse_(coarse) {}

  bool leq(const Element& x, const Element& y) const override { return encode(x).subset_of(encode(y)); }

  Element mul(const Element& x, const Element& y) const override {
    const auto a = encode(x);
    const auto b = encode(y);
    Bits out(range_ + 1);
    if (!a.none() && !b.none())
      for (std::size_t i = 0; i <= range_; ++i)
        if (a.test(i)) out.or_shifted_up(b, i);
    return decode(out);
  }

  Element join(const Element& x, const Element& y) const override { return decode(encode(x) | encode(y)); }
  Element meet(const Element& x, const Element& y) const override { return decode(encode(x) & encode(y)); }

  Element residual(const Element& y, const Element& x) const override {
    const auto target = encode(y);
    const auto divisor = encode(x);
    Bits out(range_ + 1);
    if (divisor.none()) {
      for (std::size_t t = 0; t <= range_; ++t) out.set(t);
      return decode(out);
    }
    if (target.none()) return decode(out);
    // t is excluded when t + d misses the target for some d in the divisor.
    const auto missing = target.complement();
    Bits bad(range_ + 1);
    for (std::size_t d = 0; d <= range_; ++d)
      if (divisor.test(d)) bad.or_shifted_down(missing, d);
    std::optional<std::size_t> least;
    for (std::size_t t = 0; t <= range_; t += coarse_) {
      if (!bad.test(t)) {
        if (!least) least = t;
      } else if (least) {
        throw Error("grid oracle: admissible residual values are not upward closed");
      }
    }
    return decode(from_min(least));
  }

protected:
  virtual Bits encode(const Element& x) const = 0;
  virtual Element decode(const Bits& s) const = 0;

  Bits from_min(std::optional<std::size_t> min) const {
    Bits s(range_ + 1);
    if (min)
      for (std::size_t i = *min; i <= range_; ++i) s.set(i);
    return s;
  }

  std::size_t range_;
  std::size_t coarse_;
};

class DvrModel final : public GridModel {
public:
  explicit DvrModel(const SampleFrame& f) : GridModel(4 * f.max_exp + 4, 1) {}

private:
  Bits encode(const Element& x) const override {
    const auto& e = x.as<DvrChainElement>().exponent;
    if (!e) return from_min(std::nullopt);
    if (*e > range_) throw Error("dvr oracle: exponent outside the model range");
    return from_min(*e);
  }
  Element decode(const Bits& s) const override {
    const auto m = s.first();
    if (!m) return DvrChainElement::bottom();
    return DvrChainElement::power(*m);
  }
};

// Fine grid: kFine points per step 1/L, L = lcm of the frame denominators.
// Closed cut at q starts at q; open cut at q starts one fine point later.
class RatValModel final : public GridModel {
public:
  static constexpr std::size_t kFine = 16;
  static constexpr std::size_t kCoarse = 4;

  explicit RatValModel(const SampleFrame& f)
      : GridModel(0, kCoarse), lcm_(1) {
    for (std::int64_t q = 1; q <= static_cast<std::int64_t>(f.max_den); ++q) lcm_ = std::lcm(lcm_, q);
    per_unit_ = static_cast<std::size_t>(lcm_) * kFine;
    range_ = (2 * f.max_num + 2) * per_unit_;
  }

private:
  Bits encode(const Element& x) const override {
    const auto& e = x.as<RatValElement>();
    if (e.kind == RatValElement::Kind::Bottom) return from_min(std::nullopt);
    const Rational scaled = e.value * static_cast<std::int64_t>(per_unit_);
    if (scaled.denominator() != 1) throw Error("ratval oracle: cut value off the grid");
    auto i = static_cast<std::size_t>(scaled.numerator());
    if (e.kind == RatValElement::Kind::Open) ++i;
    if (i > range_) throw Error("ratval oracle: cut value outside the model range");
    return from_min(i);
  }
  Element decode(const Bits& s) const override {
    const auto m = s.first();
    if (!m) return RatValElement::bottom();
    for (std::size_t i = *m; i <= range_; ++i)
      if (!s.test(i)) throw Error("ratval oracle: value set is not upward closed");
    const auto r = *m % kFine;
    const auto base = static_cast<std::int64_t>(*m - r);
    const Rational v(base, static_cast<std::int64_t>(per_unit_));
    if (r == 0) return RatValElement::closed(v);
    if (r <= kCoarse) return RatValElement::open(v);
    throw Error("ratval oracle: value set does not start at a cut");
  }

  std::int64_t lcm_;
  std::size_t per_unit_ = 0;
};

// ---------------------------------------------------------------------------
// Ideals of Z by residues: divisibility and generators found by search.
class DedekindModel final : public BruteForceModel {
public:
  bool leq(const Element& x, const Element& y) const override { return divides(n(y), n(x)); }

  Element mul(const Element& x, const Element& y) const override { return DedekindIntElement{n(x) * n(y)}; }

  // Generator of xZ + yZ: the least positive value of i x + j y.
  Element join(const Element& x, const Element& y) const override {
    const auto a = static_cast<std::int64_t>(n(x));
    const auto b = static_cast<std::int64_t>(n(y));
    if (a == 0 && b == 0) return DedekindIntElement{0};
    const auto bound = std::max(a, b);
    std::int64_t best = 0;
    for (std::int64_t i = -bound; i <= bound; ++i)
      for (std::int64_t j = -bound; j <= bound; ++j) {
        const auto v = i * a + j * b;
        if (v > 0 && (best == 0 || v < best)) best = v;
      }
    return DedekindIntElement{static_cast<std::uint64_t>(best)};
  }

  // Least positive common multiple.
  Element meet(const Element& x, const Element& y) const override {
    const auto a = n(x);
    const auto b = n(y);
    if (a == 0 || b == 0) return DedekindIntElement{0};
    for (std::uint64_t k = a;; k += a)
      if (k % b == 0) return DedekindIntElement{k};
  }

  // Join of {a : y | a x} over a <= kSearch, taken as the largest common divisor.
  Element residual(const Element& y, const Element& x) const override {
    const auto target = n(y);
    const auto divisor = n(x);
    std::vector<std::uint64_t> admissible;
    for (std::uint64_t a = 1; a <= kSearch; ++a)
      if (divides(target, a * divisor)) admissible.push_back(a);
    if (admissible.empty()) return DedekindIntElement{0};
    for (std::uint64_t d = admissible.front(); d >= 1; --d)
      if (std::all_of(admissible.begin(), admissible.end(), [d](std::uint64_t a) { return a % d == 0; }))
        return DedekindIntElement{d};
    return DedekindIntElement{1};
  }

private:
  static constexpr std::uint64_t kSearch = 200;
  static std::uint64_t n(const Element& e) { return e.as<DedekindIntElement>().n; }
  // d | v, by search over the quotient.
  static bool divides(std::uint64_t d, std::uint64_t v) {
    if (d == 0) return v == 0;
    for (std::uint64_t k = 0; k * d <= v; ++k)
      if (k * d == v) return true;
    return false;
  }
};

// ---------------------------------------------------------------------------
// Ideals of the semiring N as bit sets over [0, B]. Above B an ideal is
// assumed to contain exactly the multiples of its gcd; every operation is
// repeated with 2B and must agree before it is reported.
class NumSgModel final : public BruteForceModel {
public:
  bool leq(const Element& x, const Element& y) const override {
    return stable(x, y, [](const Set& a, const Set& b, std::size_t B) {
      for (std::size_t i = 0; i <= B; ++i)
        if (a.in[i] && !b.in[i]) return Set::boolean(false, B);
      return Set::boolean(true, B);
    }).in[0] != 0;
  }

  Element mul(const Element& x, const Element& y) const override {
    return stable_element(x, y, [](const Set& a, const Set& b, std::size_t B) {
      std::vector<char> products(B + 1, 0);
      for (std::size_t i = 1; i <= B; ++i) {
        if (!a.in[i]) continue;
        for (std::size_t j = 1; i * j <= B; ++j)
          if (b.in[j]) products[i * j] = 1;
      }
      if (a.empty() || b.empty()) return Set(B);
      return additive_closure(products, B);
    }, true);
  }

  Element join(const Element& x, const Element& y) const override {
    return stable_element(x, y, [](const Set& a, const Set& b, std::size_t B) {
      std::vector<char> both(B + 1, 0);
      for (std::size_t i = 1; i <= B; ++i) both[i] = a.in[i] || b.in[i];
      return additive_closure(both, B);
    });
  }

  Element meet(const Element& x, const Element& y) const override {
    return stable_element(x, y, [](const Set& a, const Set& b, std::size_t B) {
      Set out(B);
      for (std::size_t i = 1; i <= B; ++i) out.in[i] = a.in[i] && b.in[i];
      return out;
    }, true);
  }

  Element residual(const Element& y, const Element& x) const override {
    return stable_element(y, x, [](const Set& target, const Set& divisor, std::size_t B) {
      Set out(B);
      if (divisor.empty()) {
        for (std::size_t i = 1; i <= B; ++i) out.in[i] = 1;
        return out;
      }
      for (std::size_t a = 1; a <= B; ++a) {
        bool ok = true;
        for (std::size_t j = 1; j <= B && ok; ++j)
          if (divisor.in[j]) ok = target.member(a * j);
        out.in[a] = ok;
      }
      return out;
    });
  }

private:
  struct Set {
    explicit Set(std::size_t B) : in(B + 1, 0), tail_gcd(0) { in[0] = 1; }
    static Set boolean(bool v, std::size_t B) {
      Set s(B);
      s.in[0] = v;
      return s;
    }
    std::vector<char> in;
    std::uint64_t tail_gcd;  // 0: the zero ideal
    bool empty() const {
      return std::none_of(in.begin() + 1, in.end(), [](char c) { return c != 0; });
    }
    bool member(std::uint64_t n) const {
      if (n < in.size()) return in[n] != 0;
      return tail_gcd != 0 && n % tail_gcd == 0;
    }
  };

  static Set encode(const Element& e, std::size_t B) {
    const auto& v = e.as<NumSgElement>();
    Set s(B);
    s.tail_gcd = v.scale;
    if (v.scale == 0) return s;
    for (std::size_t i = 1; i <= B; ++i) s.in[i] = i % v.scale == 0 && v.semigroup.contains(i / v.scale);
    return s;
  }

  static Set additive_closure(const std::vector<char>& gens, std::size_t B) {
    Set out(B);
    std::vector<std::size_t> used;
    for (std::size_t n = 1; n <= B; ++n) {
      bool in = false;
      for (auto g : used)
        if (out.in[n - g]) {
          in = true;
          break;
        }
      if (!in && gens[n]) {
        used.push_back(n);
        in = true;
      }
      out.in[n] = in;
    }
    return out;
  }

  static Element decode(const Set& s, std::size_t B) {
    std::uint64_t g = 0;
    for (std::size_t i = 1; i <= B; ++i)
      if (s.in[i]) g = std::gcd(g, static_cast<std::uint64_t>(i));
    if (g == 0) return NumSgElement::bottom();
    std::vector<std::uint64_t> gaps;
    for (std::size_t k = 1; k * g <= B; ++k)
      if (!s.in[k * g]) gaps.push_back(k);
    return NumSgElement{g, NumericalSemigroup::from_gaps(gaps)};
  }

  // Products and intersections can start as late as the product of the
  // operands' first tail points; joins and residuals stay within their sum.
  static std::size_t initial_bound(const Element& x, const Element& y, bool product) {
    auto scaled = [](const Element& e) {
      const auto& v = e.as<NumSgElement>();
      return v.scale * (v.semigroup.conductor() + 1);
    };
    return 2 * (product ? scaled(x) * scaled(y) : scaled(x) + scaled(y)) + 4;
  }

  template <class Op>
  static Set stable(const Element& x, const Element& y, Op op) {
    std::size_t B = initial_bound(x, y, false);
    Set prev = op(encode(x, B), encode(y, B), B);
    for (int round = 0; round < 6; ++round) {
      B *= 2;
      Set next = op(encode(x, B), encode(y, B), B);
      if (next.in[0] == prev.in[0] && decode(next, B) == decode(prev, B / 2)) return next;
      prev = std::move(next);
    }
    throw Error("numsg oracle: bit-set computation did not stabilize under doubling");
  }

  template <class Op>
  static Element stable_element(const Element& x, const Element& y, Op op, bool product = false) {
    std::size_t B = initial_bound(x, y, product);
    Element prev = decode(op(encode(x, B), encode(y, B), B), B);
    for (int round = 0; round < 6; ++round) {
      B *= 2;
      Element next = decode(op(encode(x, B), encode(y, B), B), B);
      if (next == prev) return next;
      prev = std::move(next);
    }
    throw Error("numsg oracle: bit-set computation did not stabilize under doubling");
  }
};

// ---------------------------------------------------------------------------
// The lattice of v-ideals of the monoid <a, b, c | a^2 = bc, b^2 = ac, c^2 = ab>.
// Monoid elements are exponent triples reduced by the defining relations;
// ideals are subsets of the elements of degree <= K, with every element of
// higher degree implicitly present in a nonzero ideal.
class Ex17Model final : public BruteForceModel {
public:
  explicit Ex17Model(const SampleFrame& f) : K_(static_cast<unsigned>(2 * f.max_deg + 2)) {
    // Grow the element list degree by degree from 1 by multiplying with a, b, c.
    elements_.push_back({0, 0, 0});
    std::size_t level_start = 0;
    for (unsigned d = 1; d <= 2 * K_; ++d) {
      const std::size_t level_end = elements_.size();
      for (std::size_t i = level_start; i < level_end; ++i)
        for (const Word& g : {Word{1, 0, 0}, Word{0, 1, 0}, Word{0, 0, 1}}) {
          const Word w = reduce(product(elements_[i], g));
          if (std::find(elements_.begin() + static_cast<std::ptrdiff_t>(level_end), elements_.end(), w) ==
              elements_.end())
            elements_.push_back(w);
        }
      level_start = level_end;
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
    small_ = static_cast<std::size_t>(
        std::count_if(elements_.begin(), elements_.end(), [&](const Word& w) { return degree(w) <= K_; }));
    const auto n = elements_.size();
    divides_.assign(n * n, false);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w) divides_[u * n + w] = divides_search(u, w);
    times_.assign(small_ * small_, 0);
    for (std::size_t i = 0; i < small_; ++i)
      for (std::size_t j = 0; j < small_; ++j) {
        const Word w = reduce(product(elements_[i], elements_[j]));
        times_[i * small_ + j] = degree(w) > 2 * K_ ? n : index_.at(w);
      }
  }

  bool leq(const Element& x, const Element& y) const override {
    const auto a = encode(x);
    const auto b = encode(y);
    for (std::size_t i = 0; i < small_; ++i)
      if (a.members[i] && !b.members[i]) return false;
    return !a.nonzero || b.nonzero;
  }

  Element mul(const Element& x, const Element& y) const override {
    const auto a = encode(x);
    const auto b = encode(y);
    Ideal out = empty();
    if (!a.nonzero || !b.nonzero) return decode(out);
    out.nonzero = true;
    for (std::size_t i = 0; i < small_; ++i)
      for (std::size_t j = 0; j < small_; ++j)
        if (a.members[i] && b.members[j]) {
          const auto k = times(i, j);
          if (k < small_) out.members[k] = true;
        }
    return decode(v_closure(out));
  }

  Element join(const Element& x, const Element& y) const override {
    auto a = encode(x);
    const auto b = encode(y);
    for (std::size_t i = 0; i < small_; ++i) a.members[i] = a.members[i] || b.members[i];
    a.nonzero = a.nonzero || b.nonzero;
    return decode(v_closure(a));
  }

  Element meet(const Element& x, const Element& y) const override {
    auto a = encode(x);
    const auto b = encode(y);
    for (std::size_t i = 0; i < small_; ++i) a.members[i] = a.members[i] && b.members[i];
    a.nonzero = a.nonzero && b.nonzero;
    return decode(a);
  }

  Element residual(const Element& y, const Element& x) const override {
    const auto target = encode(y);
    const auto divisor = encode(x);
    Ideal out = empty();
    if (!divisor.nonzero) return decode(full());
    if (!target.nonzero) return decode(out);
    out.nonzero = true;
    for (std::size_t z = 0; z < small_; ++z) {
      bool ok = true;
      for (std::size_t j = 0; j < small_ && ok; ++j)
        if (divisor.members[j]) ok = member(target, times(z, j));
      out.members[z] = ok;
    }
    return decode(out);
  }

private:
  using Word = std::array<unsigned, 3>;
  struct Ideal {
    std::vector<bool> members;
    bool nonzero = false;
  };

  static unsigned degree(const Word& w) { return w[0] + w[1] + w[2]; }
  static Word product(const Word& u, const Word& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }
  static Word reduce(Word w) {
    for (;;) {
      if (w[1] >= 2) {  // b^2 = ac
        w[1] -= 2, w[0] += 1, w[2] += 1;
      } else if (w[2] >= 2) {  // c^2 = ab
        w[2] -= 2, w[0] += 1, w[1] += 1;
      } else if (w[1] >= 1 && w[2] >= 1) {  // bc = a^2
        w[1] -= 1, w[2] -= 1, w[0] += 2;
      } else {
        return w;
      }
    }
  }

  std::size_t times(std::size_t i, std::size_t j) const { return times_[i * small_ + j]; }
  bool divides(std::size_t u, std::size_t w) const { return divides_[u * elements_.size() + w]; }
  bool member(const Ideal& s, std::size_t k) const {
    if (k >= small_) return s.nonzero;
    return s.members[k];
  }
  // u divides w: some v of the right degree has u v = w.
  bool divides_search(std::size_t u, std::size_t w) const {
    const auto du = degree(elements_[u]);
    const auto dw = degree(elements_[w]);
    if (du > dw) return false;
    for (std::size_t v = 0; v < elements_.size(); ++v)
      if (degree(elements_[v]) == dw - du && reduce(product(elements_[u], elements_[v])) == elements_[w]) return true;
    return false;
  }

  Ideal empty() const { return {std::vector<bool>(small_, false), false}; }
  Ideal full() const { return {std::vector<bool>(small_, true), true}; }

  Ideal principal(std::size_t g) const {
    Ideal s = empty();
    s.nonzero = true;
    for (std::size_t i = 0; i < small_; ++i) s.members[i] = divides(g, i);
    return s;
  }

  // x is in M_v iff every fractional principal ideal (y/z)H containing M contains x:
  // (for all m in M: y | zm) implies y | zx.
  Ideal v_closure(const Ideal& M) const {
    if (!M.nonzero) return M;
    Ideal out = full();
    for (std::size_t y = 0; y < small_; ++y)
      for (std::size_t z = 0; z < small_; ++z) {
        bool contains_m = true;
        for (std::size_t m = 0; m < small_ && contains_m; ++m)
          if (M.members[m]) contains_m = divides_or_high(y, times(z, m));
        if (!contains_m) continue;
        for (std::size_t x = 0; x < small_; ++x)
          if (out.members[x] && !divides_or_high(y, times(z, x))) out.members[x] = false;
      }
    return out;
  }
  bool divides_or_high(std::size_t y, std::size_t w) const {
    if (w >= elements_.size()) return true;
    if (degree(elements_[w]) > degree(elements_[y])) return true;
    return divides(y, w);
  }

  std::size_t word_index(unsigned n, std::uint8_t tag) const {
    Word w{n, 0, 0};
    if (tag != 0) {
      w[0] = n - 1;
      w[tag] = 1;
    }
    return index_.at(reduce(w));
  }

  Ideal encode(const Element& e) const {
    const auto& v = e.as<Ex17Element>();
    switch (v.kind) {
    case Ex17Element::Kind::Bottom: return empty();
    case Ex17Element::Kind::Top: return full();
    case Ex17Element::Kind::Principal: return principal(word_index(v.degree, v.tag));
    case Ex17Element::Kind::MLevel: {
      // a^k m is generated by a^(k+1), a^k b, a^k c.
      Ideal s = empty();
      s.nonzero = true;
      for (std::uint8_t t = 0; t < 3; ++t) {
        const auto p = principal(word_index(v.degree + 1, t));
        for (std::size_t i = 0; i < small_; ++i) s.members[i] = s.members[i] || p.members[i];
      }
      return v_closure(s);
    }
    }
    return empty();
  }

  Element decode(const Ideal& s) const {
    if (!s.nonzero) return Ex17Element::bottom();
    if (s.members[0]) return Ex17Element::top();
    unsigned low = K_ + 1;
    for (std::size_t i = 0; i < small_; ++i)
      if (s.members[i]) low = std::min(low, degree(elements_[i]));
    if (low > K_) throw Error("ex17 oracle: ideal has no element within the truncation degree");
    std::vector<std::size_t> lowest;
    for (std::size_t i = 0; i < small_; ++i)
      if (s.members[i] && degree(elements_[i]) == low) lowest.push_back(i);
    if (lowest.size() == 1) {
      const auto& w = elements_[lowest.front()];
      const std::uint8_t tag = w[1] ? 1 : w[2] ? 2 : 0;
      return Ex17Element::principal(low, tag);
    }
    if (lowest.size() == 3) return Ex17Element::m_level(low - 1);
    throw Error("ex17 oracle: ideal is not a v-ideal");
  }

  unsigned K_;
  std::vector<Word> elements_;
  std::map<Word, std::size_t> index_;
  std::size_t small_ = 0;
  std::vector<bool> divides_;
  std::vector<std::size_t> times_;
};

} // namespace

std::unique_ptr<BruteForceModel> brute_force_model(BackendId id, const SampleFrame& frame) {
  switch (id) {
  case BackendId::DvrChain: return std::make_unique<DvrModel>(frame);
  case BackendId::DedekindInt: return std::make_unique<DedekindModel>();
  case BackendId::RatVal: return std::make_unique<RatValModel>(frame);
  case BackendId::NumSg: return std::make_unique<NumSgModel>();
  case BackendId::Ex17: return std::make_unique<Ex17Model>(frame);
  }
  throw Error("unknown backend");
}

Verdict oracle_check(const Lattice& L, const SampleFrame& frame) {
  const auto model = brute_force_model(L.id(), frame);
  const auto elems = L.enumerate(frame);
  Tally tally;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (!tally.check(L.leq(x, y) == model->leq(x, y), {x, y}, "leq disagrees with oracle")) return tally.verdict();
      if (!tally.check(L.mul(x, y) == model->mul(x, y), {x, y}, "mul disagrees with oracle")) return tally.verdict();
      if (!tally.check(L.join(x, y) == model->join(x, y), {x, y}, "join disagrees with oracle")) return tally.verdict();
      if (!tally.check(L.meet(x, y) == model->meet(x, y), {x, y}, "meet disagrees with oracle")) return tally.verdict();
      if (!tally.check(L.residual(x, y) == model->residual(x, y), {x, y}, "residual disagrees with oracle"))
        return tally.verdict();
    }
  return tally.verdict(std::to_string(elems.size()) + " frame elements, all ordered pairs");
}

} // namespace divlat
