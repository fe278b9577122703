#pragma once

#include "divlat/lattice.hpp"

#include <vector>

namespace divlat {

/// x_p together with its inputs.
struct LocalizedElement {
  Element base;
  Element prime;
  Element value;
};

/// Closed-form localization. Throws Error when p is not prime.
LocalizedElement localize(const Lattice& L, const Element& x, const Element& p);

/// x_p from its definition: the join of frame compacts a with as <= x for some
/// frame compact s not below p. Throws FrameInsufficient when the join changes
/// on the probe frame.
Element localize_by_definition(const Lattice& L, const Element& x, const Element& p, const SampleFrame& frame);

/// {x_p : x in frame}, sorted and duplicate-free.
std::vector<Element> localized_image(const Lattice& L, const Element& p, const SampleFrame& frame);

/// Localization rules on the frame: x <= x_p, (x_p)_p = x_p, (x ^ y)_p = x_p ^ y_p,
/// x_p = 1 iff x is not below p, separation by frame maximals, (y:x)_p <= (y_p:x_p)
/// with equality for compact x, compact c gives compact c_p; plus agreement with
/// localize_by_definition where that join is stable.
Verdict check_localization_rules(const Lattice& L, const SampleFrame& frame, const Element& p);

/// L_m as the localized image of the frame, with product (xy)_m, residual (y:x)_m
/// and principals x_m: every nonzero image element equals its closure there.
Verdict check_local_divisorial(const Lattice& L, const SampleFrame& frame, const Element& m);

/// Divisorial iff h-local and every L_m (m a frame maximal) divisorial.
Verdict check_theorem8(const Lattice& L, const SampleFrame& frame);

} // namespace divlat
