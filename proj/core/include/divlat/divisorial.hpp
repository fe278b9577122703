#pragma once

#include "divlat/lattice.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace divlat {

/// One evaluation of a_v = (x:(x:a)).
struct ClosureWitness {
  Element input;
  std::optional<Element> principal;  // x; absent for a = 0
  std::optional<Element> colon;      // (x:a)
  Element closure;                   // a_v
};

/// (x:(x:a)) for a nonzero principal x <= a (not checked).
Element closure_via(const Lattice& L, const Element& a, const Element& x);

/// Divisorial closure over one frame, caching the frame principals and
/// already computed closures. Not safe for concurrent use; make one per job.
class ClosureEngine {
public:
  ClosureEngine(const Lattice& L, const SampleFrame& frame);

  const Lattice& lattice() const { return L_; }
  const SampleFrame& frame() const { return frame_; }
  const std::vector<Element>& elements() const { return elements_; }
  /// Nonzero frame principals in enumeration order.
  const std::vector<Element>& principals() const { return principals_; }

  /// Uses the first frame principal below a. Throws FrameInsufficient when there is none.
  ClosureWitness witness(const Element& a) const;
  const Element& closure(const Element& a) const;
  bool is_divisorial(const Element& a) const { return closure(a) == a; }

  /// First frame principal below a, if any.
  std::optional<Element> first_principal_below(const Element& a) const;

private:
  const Lattice& L_;
  SampleFrame frame_;
  std::vector<Element> elements_;
  std::vector<Element> principals_;
  mutable std::map<Element, Element> cache_;
};

ClosureWitness v_closure(const Lattice& L, const Element& a, const SampleFrame& frame);

/// Every frame element equals its closure; a failure carries [a, a_v] for the first that does not.
Verdict is_divisorial(const Lattice& L, const SampleFrame& frame);

/// Meet of (x:y) over frame principals x, y with a <= (x:y). Never below a_v;
/// equal to it once the frame holds a pair realizing the closure.
Element v_closure_oracle(const Lattice& L, const Element& a, const SampleFrame& frame);

/// Witness identities for one a and principal z: z(y:a) = (zy:a) and
/// (x:(x:a)) = (y:(y:a)) for all frame principals x, y <= a.
Verdict check_lemma2(const Lattice& L, const Element& a, const Element& z, const SampleFrame& frame);
/// Witness independence of the closure for every frame element with at least
/// two frame principals below it, plus z(y:a) = (zy:a) on a thinned sample.
Verdict check_lemma2(const Lattice& L, const SampleFrame& frame);

/// Closure-operator laws on the whole frame, pairs included.
Verdict check_prop81(const Lattice& L, const SampleFrame& frame);

/// v_closure_oracle = v_closure for every nonzero frame element. With
/// `doubling_probe`, the principals of the doubled frame must not lower the meet.
Verdict check_prop12(const Lattice& L, const SampleFrame& frame, bool doubling_probe = true);

/// For divisorial L: a <= b iff (x:b) <= (x:a), for frame principals x <= a ^ b.
Verdict check_remark3(const Lattice& L, const SampleFrame& frame);

/// For divisorial L: (x : meet(family)) = join of (x : a_i) for every frame principal x <= meet(family).
Verdict check_lemma4(const Lattice& L, std::span<const Element> family, const SampleFrame& frame);
/// check_lemma4 on two-element families drawn from the frame.
Verdict check_lemma4(const Lattice& L, const SampleFrame& frame);

/// The smallest b with a <= b and b not below p, as the meet of frame candidates.
/// Exact closed form on dedekind-int. Throws FrameInsufficient when the
/// candidate meet changes on the doubled frame.
Element a_of_p(const Lattice& L, const Element& a, const Element& p, const SampleFrame& frame);

/// a(p) = 1 for a nonzero prime a and a maximal p >= a (requires divisorial L).
Verdict check_theorem5_prime(const Lattice& L, const Element& a, const Element& p, const SampleFrame& frame);
/// a(p) is not below p for every frame a and maximal p >= a, a(p) = 1 for prime
/// a, and the join of a(p) over the maximals above a is 1.
Verdict check_theorem5(const Lattice& L, const SampleFrame& frame);

/// Unique maximal above every nonzero frame prime; finite and complete
/// maximal lists above every nonzero frame element.
Verdict is_h_local(const Lattice& L, const SampleFrame& frame);

struct Classification {
  Verdict lattice_domain;
  Verdict divisorial;
  Verdict h_local;
  Verdict prufer;
  Verdict valuation;
  Verdict integrally_closed;
  Verdict completely_integrally_closed;
  Verdict dedekind;
};

/// Each flag by its definition over the frame; flags the backend asserts
/// globally are upgraded to HoldsGlobally.
Classification classify(const Lattice& L, const SampleFrame& frame);

/// The implications dedekind => cic => ic, prufer => ic and divisorial => h-local
/// among decisive flags.
Verdict check_classification(const Classification& c);

/// For divisorial L and c != 0: if (cz:c) = z for every frame principal z, c is principal.
Verdict check_lemma9(const Lattice& L, const Element& c, const SampleFrame& frame);
/// check_lemma9 for every nonzero frame element.
Verdict check_lemma9(const Lattice& L, const SampleFrame& frame);

/// Valuation L: divisorial iff the maximal element is principal.
Verdict check_lemma14(const Lattice& L, const SampleFrame& frame);
/// Integrally closed L: divisorial iff Prufer, h-local and maximals principal.
Verdict check_theorem10(const Lattice& L, const SampleFrame& frame);
/// Completely integrally closed L: divisorial iff Dedekind.
Verdict check_cic_theorem(const Lattice& L, const SampleFrame& frame);
/// Divisorial L is h-local. A non-divisorial backend holds vacuously, with the
/// non-divisorial witness attached.
Verdict check_theorem11(const Lattice& L, const SampleFrame& frame);

/// A maximal m and principal x with m^2 < x < m give (x:m) = m and m_v = m.
Verdict check_example15(const Lattice& L, const SampleFrame& frame);
/// numsg only: (d*S)_v = d*<1> for every frame ideal, so only principals are divisorial.
Verdict check_example_numsg(const Lattice& L, const SampleFrame& frame);
/// ex17 only: defining relations, the displayed order, (a:m) = m and every frame element divisorial.
Verdict check_example17(const Lattice& L, const SampleFrame& frame);

} // namespace divlat
