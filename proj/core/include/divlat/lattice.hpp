#pragma once

#include "divlat/element.hpp"
#include "divlat/error.hpp"
#include "divlat/frame.hpp"
#include "divlat/verdict.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divlat {

/// Identifies a shipped lattice and the structural facts its closed forms assert globally.
struct BackendDescriptor {
  BackendId id;
  std::string_view name;
  bool local;      // exactly one maximal element
  bool valuation;  // totally ordered
  bool dedekind;   // every element principal
  std::string_view summary;
};

/// A multiplicative lattice domain with exact symbolic operations.
///
/// Every operation rejects elements of another backend with BackendMismatch.
/// Elements are canonical, so `==` is lattice equality.
class Lattice {
public:
  virtual ~Lattice() = default;

  virtual const BackendDescriptor& descriptor() const = 0;
  BackendId id() const { return descriptor().id; }
  std::string_view name() const { return descriptor().name; }

  virtual Element bottom() const = 0;
  virtual Element top() const = 0;

  virtual bool leq(const Element& x, const Element& y) const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  virtual Element join(const Element& x, const Element& y) const = 0;
  virtual Element meet(const Element& x, const Element& y) const = 0;
  /// (y : x), the largest a with a*x <= y.
  virtual Element residual(const Element& y, const Element& x) const = 0;

  /// Join of a finite set; the empty join is 0.
  Element join(std::span<const Element> xs) const;
  /// Meet of a finite set; the empty meet is 1.
  Element meet(std::span<const Element> xs) const;

  virtual bool is_principal(const Element& x) const = 0;
  virtual bool is_compact(const Element& x) const = 0;
  virtual bool is_prime(const Element& p) const = 0;
  virtual bool is_maximal(const Element& p) const = 0;
  /// Complete list of maximal elements >= a. Throws Unsupported when that set is infinite.
  virtual std::vector<Element> maximals_above(const Element& a) const = 0;

  /// Closed-form localization x_p at a prime p.
  virtual Element localize(const Element& x, const Element& p) const = 0;

  /// Frame elements: finite, duplicate-free, deterministic, starting with 0 then 1.
  virtual std::vector<Element> enumerate(const SampleFrame& frame) const = 0;
  /// Nonzero principal elements of the frame, in enumeration order.
  virtual std::vector<Element> enumerate_principals(const SampleFrame& frame) const;

  virtual Element parse(std::string_view literal) const = 0;
  virtual std::string print(const Element& x) const = 0;

  bool lt(const Element& x, const Element& y) const { return x != y && leq(x, y); }

protected:
  void require(const Element& x) const;
};

/// The process-wide instance of each backend.
const Lattice& lattice(BackendId id);

/// Nonzero principal elements of the frame below a, in enumeration order.
/// Throws FrameInsufficient when a != 0 and none is found.
std::vector<Element> principal_below(const Lattice& L, const Element& a, const SampleFrame& frame);

/// Maximal elements among the frame elements.
std::vector<Element> maximals_in_frame(const Lattice& L, const SampleFrame& frame);

/// Both defining identities of a principal element for one pair (y, z):
///   y ^ zx = ((y:x) ^ z) x   and   y v (z:x) = ((yx v z) : x).
bool principal_identities_hold(const Lattice& L, const Element& x, const Element& y, const Element& z);

/// Checks the principal-element identities of x for all frame pairs (y, z).
/// A failure carries the witness [x, y, z].
Verdict check_principal_definition(const Lattice& L, const Element& x, const SampleFrame& frame);

/// Lattice-domain axioms on the frame: order, monoid and residuation laws,
/// distributivity, 0 prime, principal generation, compactness corners and
/// cancellation by nonzero principal elements.
Verdict axioms_suite(const Lattice& L, const SampleFrame& frame);

} // namespace divlat
