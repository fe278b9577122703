#pragma once

#include "divlat/lattice.hpp"

#include <memory>

namespace divlat {

/// Brute-force reference model of one backend.
///
/// Each model works on explicit finite sets (value grids, residues, bit sets
/// of naturals, v-ideals of a monoid presentation) and never calls the
/// backend's closed forms; elements are only converted in and out.
class BruteForceModel {
public:
  virtual ~BruteForceModel() = default;
  virtual bool leq(const Element& x, const Element& y) const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  virtual Element join(const Element& x, const Element& y) const = 0;
  virtual Element meet(const Element& x, const Element& y) const = 0;
  virtual Element residual(const Element& y, const Element& x) const = 0;
};

/// Model sized for elements of `frame` (and products of two of them).
std::unique_ptr<BruteForceModel> brute_force_model(BackendId id, const SampleFrame& frame);

/// Compares leq/mul/join/meet/residual with the brute-force model on every
/// pair of frame elements. A failure carries the offending pair.
Verdict oracle_check(const Lattice& L, const SampleFrame& frame);

} // namespace divlat
