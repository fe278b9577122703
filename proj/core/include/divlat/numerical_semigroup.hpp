#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace divlat {

/// A numerical semigroup: a submonoid of (N, +) with finite complement.
///
/// Identified by its sorted gap set, so equality is semigroup equality and
/// ordering is lexicographic on gaps. The whole of N has no gaps. Copies
/// share one immutable representation.
class NumericalSemigroup {
public:
  NumericalSemigroup() = default;

  /// Monoid generated by `generators`; throws std::invalid_argument unless gcd is 1.
  static NumericalSemigroup from_generators(std::span<const std::uint64_t> generators);

  /// Validates that the complement of `gaps` is closed under addition.
  static NumericalSemigroup from_gaps(std::vector<std::uint64_t> gaps);

  /// Builds {n : member(n)}; the caller guarantees every n >= conductor_bound is a member.
  static NumericalSemigroup from_membership(const std::function<bool(std::uint64_t)>& member,
                                            std::uint64_t conductor_bound);

  /// Every numerical semigroup with Frobenius number <= max_frobenius (N included),
  /// in a fixed deterministic order.
  static std::vector<NumericalSemigroup> with_frobenius_at_most(std::uint64_t max_frobenius);

  bool contains(std::uint64_t n) const {
    return !rep_ || n >= rep_->member.size() || rep_->member[n] != 0;
  }
  bool is_whole() const { return !rep_; }

  /// Smallest c with c + N contained in the semigroup (0 for N).
  std::uint64_t conductor() const { return rep_ ? rep_->member.size() : 0; }
  std::int64_t frobenius() const { return static_cast<std::int64_t>(conductor()) - 1; }
  std::uint64_t multiplicity() const { return rep_ ? rep_->generators.front() : 1; }
  const std::vector<std::uint64_t>& minimal_generators() const;
  const std::vector<std::uint64_t>& gaps() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gaps() == b.gaps(); }
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps() <=> b.gaps();
  }

private:
  struct Rep {
    std::vector<std::uint64_t> gaps;        // sorted, nonempty
    std::vector<char> member;               // membership below the conductor
    std::vector<std::uint64_t> generators;  // minimal generators, ascending
  };
  static NumericalSemigroup from_member_bits(std::vector<char> member);
  std::shared_ptr<const Rep> rep_;
};

} // namespace divlat
