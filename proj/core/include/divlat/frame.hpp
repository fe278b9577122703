#pragma once

#include "divlat/element.hpp"

#include <cstdint>
#include <vector>

namespace divlat {

/// Finite enumeration bounds standing in for quantification over a whole lattice.
///
/// Each backend reads only its own bounds. The defaults are the CI frames.
struct SampleFrame {
  std::uint64_t max_exp = 20;    // dvr-chain: exponents m^k, k <= max_exp
  std::uint64_t max_int = 200;   // dedekind-int: n <= max_int
  std::uint64_t max_num = 10;    // ratval: cut values p/q with p <= max_num
  std::uint64_t max_den = 6;     //          and q <= max_den
  std::uint64_t max_frob = 15;   // numsg: semigroups with Frobenius number <= max_frob
  std::uint64_t max_scale = 4;   //        scales d <= max_scale
  std::uint64_t max_deg = 8;     // ex17: principal degree <= max_deg, m-level < max_deg

  /// Upper bound on the number of tuples a single pair/triple-quantified
  /// check evaluates; larger frames are thinned by a deterministic stride.
  std::uint64_t tuple_budget = 1'000'000;

  /// All bounds doubled (the frame-stability probe).
  SampleFrame doubled() const;

  friend bool operator==(const SampleFrame&, const SampleFrame&) = default;
};

/// Frame for doubling-stability probes: doubled(), except that numsg keeps
/// its Frobenius bound (doubling it multiplies the semigroup count by hundreds).
SampleFrame probe_frame(BackendId id, const SampleFrame& frame);

/// Default frames used by oracle_check (small enough for brute force).
SampleFrame oracle_frame();

/// Deterministic sub-selection of `elements` with size^arity <= budget.
/// Keeps the first two entries (0 and 1 in every enumeration) and an even
/// stride through the rest; returns `elements` unchanged when it fits.
std::vector<Element> thin_for_arity(const std::vector<Element>& elements, unsigned arity, std::uint64_t budget);

} // namespace divlat
