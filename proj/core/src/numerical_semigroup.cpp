#include "divlat/numerical_semigroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace divlat {
namespace {

// Minimal generators from membership below the conductor. A member n is a
// minimal generator exactly when no smaller minimal generator g leaves a
// member n - g.
std::vector<std::uint64_t> generators_of(const std::vector<char>& member) {
  auto in = [&](std::uint64_t n) { return n >= member.size() || member[n] != 0; };
  std::uint64_t m = 1;
  while (!in(m)) ++m;
  std::vector<std::uint64_t> gens{m};
  const auto limit = member.size() + m;
  for (std::uint64_t n = m + 1; n < limit; ++n) {
    if (!in(n)) continue;
    bool decomposable = false;
    for (auto g : gens)
      if (in(n - g)) {
        decomposable = true;
        break;
      }
    if (!decomposable) gens.push_back(n);
  }
  return gens;
}

} // namespace

const std::vector<std::uint64_t>& NumericalSemigroup::minimal_generators() const {
  static const std::vector<std::uint64_t> whole{1};
  return rep_ ? rep_->generators : whole;
}

const std::vector<std::uint64_t>& NumericalSemigroup::gaps() const {
  static const std::vector<std::uint64_t> none;
  return rep_ ? rep_->gaps : none;
}

NumericalSemigroup NumericalSemigroup::from_member_bits(std::vector<char> member) {
  while (!member.empty() && member.back()) member.pop_back();
  NumericalSemigroup s;
  if (member.empty()) return s;
  Rep rep;
  for (std::uint64_t n = 1; n < member.size(); ++n)
    if (!member[n]) rep.gaps.push_back(n);
  rep.generators = generators_of(member);
  rep.member = std::move(member);
  s.rep_ = std::make_shared<const Rep>(std::move(rep));
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::uint64_t> generators) {
  std::vector<std::uint64_t> gens;
  for (auto g : generators)
    if (g != 0) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::uint64_t g0 = 0;
  for (auto g : gens) g0 = std::gcd(g0, g);
  if (g0 != 1) throw std::invalid_argument("generators of a numerical semigroup must have gcd 1");

  const std::uint64_t m = gens.front();
  if (m == 1) return {};

  // Membership in chunks of w = min(64, m) consecutive integers. Every n in a
  // chunk only depends on n - g for minimal generators g >= m >= w, all of
  // which lie before the chunk, so a chunk is one OR of shifted words per
  // generator. A listed generator not reached that way is minimal. Once m
  // consecutive members appear, every larger integer is a member.
  const std::uint64_t w = std::min<std::uint64_t>(64, m);
  const std::uint64_t low = w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  std::vector<std::uint64_t> bits{1};
  auto extract = [&](std::uint64_t pos) {
    const auto k = pos / 64;
    const auto off = pos % 64;
    std::uint64_t v = k < bits.size() ? bits[k] >> off : 0;
    if (off && k + 1 < bits.size()) v |= bits[k + 1] << (64 - off);
    return v & low;
  };
  auto deposit = [&](std::uint64_t pos, std::uint64_t v) {
    const auto k = pos / 64;
    const auto off = pos % 64;
    if (bits.size() < k + 2) bits.resize(k + 2, 0);
    bits[k] |= v << off;
    if (off) bits[k + 1] |= v >> (64 - off);
  };

  Rep rep;
  auto next_gen = gens.begin();
  std::uint64_t last_gap = 0;
  for (std::uint64_t pos = 1; pos <= last_gap + m; pos += w) {
    std::uint64_t reached = 0;
    for (auto g : rep.generators) reached |= extract(pos - g);
    std::uint64_t listed = 0;
    for (; next_gen != gens.end() && *next_gen < pos + w; ++next_gen) listed |= std::uint64_t{1} << (*next_gen - pos);
    for (auto fresh = listed & ~reached; fresh; fresh &= fresh - 1)
      rep.generators.push_back(pos + static_cast<std::uint64_t>(__builtin_ctzll(fresh)));
    const auto in = reached | listed;
    deposit(pos, in);
    for (auto gap = ~in & low; gap; gap &= gap - 1) {
      last_gap = pos + static_cast<std::uint64_t>(__builtin_ctzll(gap));
      rep.gaps.push_back(last_gap);
    }
  }
  rep.member.resize(last_gap + 1);
  for (std::uint64_t n = 0; n <= last_gap; ++n) rep.member[n] = (bits[n / 64] >> (n % 64)) & 1;
  NumericalSemigroup s;
  s.rep_ = std::make_shared<const Rep>(std::move(rep));
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<std::uint64_t> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!gaps.empty() && gaps.front() == 0) throw std::invalid_argument("0 cannot be a gap");
  if (gaps.empty()) return {};
  std::vector<char> member(gaps.back() + 1, 1);
  for (auto g : gaps) member[g] = 0;
  const auto c = member.size();
  for (std::uint64_t a = 1; a < c; ++a) {
    if (!member[a]) continue;
    for (std::uint64_t b = a; a + b < c; ++b)
      if (member[b] && !member[a + b]) throw std::invalid_argument("gap set complement is not closed under addition");
  }
  return from_member_bits(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::function<bool(std::uint64_t)>& member,
                                                       std::uint64_t conductor_bound) {
  std::vector<char> bits(std::max<std::uint64_t>(conductor_bound, 1), 1);
  for (std::uint64_t n = 1; n < conductor_bound; ++n) bits[n] = member(n) ? 1 : 0;
  return from_member_bits(std::move(bits));
}

std::vector<NumericalSemigroup> NumericalSemigroup::with_frobenius_at_most(std::uint64_t max_frobenius) {
  // Semigroup tree: the children of S are S minus a minimal generator larger
  // than its Frobenius number. Every semigroup appears exactly once, and the
  // Frobenius number of a child is the removed generator.
  std::vector<NumericalSemigroup> out;
  std::deque<NumericalSemigroup> queue{NumericalSemigroup{}};
  while (!queue.empty()) {
    NumericalSemigroup s = std::move(queue.front());
    queue.pop_front();
    const auto f = s.frobenius();
    for (auto g : s.minimal_generators()) {
      if (static_cast<std::int64_t>(g) <= f || g > max_frobenius) continue;
      std::vector<char> member(g + 1, 1);
      for (auto gap : s.gaps()) member[gap] = 0;
      member[g] = 0;
      queue.push_back(from_member_bits(std::move(member)));
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.gaps() < b.gaps();
  });
  return out;
}

} // namespace divlat
