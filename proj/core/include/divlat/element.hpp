#pragma once

#include "divlat/numerical_semigroup.hpp"

#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <tuple>
#include <variant>

namespace divlat {

/// The five shipped lattices. The numeric value is the index of the
/// matching alternative in Element's payload variant.
enum class BackendId : std::uint8_t { DvrChain = 0, DedekindInt = 1, RatVal = 2, NumSg = 3, Ex17 = 4 };

inline constexpr std::array<BackendId, 5> kAllBackends{BackendId::DvrChain, BackendId::DedekindInt,
                                                       BackendId::RatVal, BackendId::NumSg, BackendId::Ex17};

std::string_view backend_name(BackendId id);
/// Accepts the names printed by backend_name; throws ParseError otherwise.
BackendId backend_from_name(std::string_view name);

using Rational = boost::rational<std::int64_t>;

/// Ideal m^k of a discrete valuation ring; no exponent means the zero ideal.
struct DvrChainElement {
  std::optional<std::uint64_t> exponent;

  static DvrChainElement bottom() { return {}; }
  static DvrChainElement power(std::uint64_t k) { return {k}; }

  friend bool operator==(const DvrChainElement&, const DvrChainElement&) = default;
  friend bool operator<(const DvrChainElement& a, const DvrChainElement& b) { return a.exponent < b.exponent; }
};

/// The ideal nZ, n >= 0.
struct DedekindIntElement {
  std::uint64_t n = 0;

  friend bool operator==(const DedekindIntElement&, const DedekindIntElement&) = default;
  friend bool operator<(const DedekindIntElement& a, const DedekindIntElement& b) { return a.n < b.n; }
};

/// Ideal of a valuation ring with value group Q, described by its value set:
/// {v >= q} (closed cut) or {v > q} (open cut). The top is the closed cut at 0,
/// the maximal element is the open cut at 0.
struct RatValElement {
  enum class Kind : std::uint8_t { Bottom, Closed, Open };
  Kind kind = Kind::Bottom;
  Rational value{0};

  static RatValElement bottom() { return {}; }
  static RatValElement closed(Rational q) { return {Kind::Closed, q}; }
  static RatValElement open(Rational q) { return {Kind::Open, q}; }

  friend bool operator==(const RatValElement&, const RatValElement&) = default;
  friend bool operator<(const RatValElement& a, const RatValElement& b) {
    return std::tie(a.kind, a.value) < std::tie(b.kind, b.value);
  }
};

/// Ideal d*S of the semiring N: the scale d times a numerical semigroup S.
/// Scale 0 is the zero ideal; S = N gives the principal ideal dN.
struct NumSgElement {
  std::uint64_t scale = 0;
  NumericalSemigroup semigroup;

  static NumSgElement bottom() { return {}; }
  static NumSgElement principal(std::uint64_t d) { return {d, NumericalSemigroup{}}; }

  friend bool operator==(const NumSgElement&, const NumSgElement&) = default;
  friend bool operator<(const NumSgElement& a, const NumSgElement& b) {
    return std::tie(a.scale, a.semigroup) < std::tie(b.scale, b.semigroup);
  }
};

/// Element of the ideal lattice of Z[sqrt(-3)] localized at m = (2, 1+sqrt(-3)).
///
/// Principal(n, t) is the degree-n monomial a^n, a^(n-1) b or a^(n-1) c
/// (tag 0, 1, 2); MLevel(k) is a^k m.
struct Ex17Element {
  enum class Kind : std::uint8_t { Bottom, Top, Principal, MLevel };
  Kind kind = Kind::Bottom;
  std::uint32_t degree = 0;
  std::uint8_t tag = 0;

  static Ex17Element bottom() { return {}; }
  static Ex17Element top() { return {Kind::Top, 0, 0}; }
  static Ex17Element principal(std::uint32_t n, std::uint8_t tag) { return {Kind::Principal, n, tag}; }
  static Ex17Element m_level(std::uint32_t k) { return {Kind::MLevel, k, 0}; }

  friend bool operator==(const Ex17Element&, const Ex17Element&) = default;
  friend bool operator<(const Ex17Element& a, const Ex17Element& b) {
    return std::tie(a.kind, a.degree, a.tag) < std::tie(b.kind, b.degree, b.tag);
  }
};

using Payload = std::variant<DvrChainElement, DedekindIntElement, RatValElement, NumSgElement, Ex17Element>;

/// A backend-tagged lattice element in canonical form.
class Element {
public:
  Element() = default;
  template <class P>
    requires std::is_constructible_v<Payload, P>
  Element(P payload) : payload_(std::move(payload)) {}

  BackendId backend() const { return static_cast<BackendId>(payload_.index()); }
  const Payload& payload() const { return payload_; }

  template <class P>
  const P& as() const {
    return std::get<P>(payload_);
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) { return a.payload_ < b.payload_; }

private:
  Payload payload_;
};

} // namespace divlat
