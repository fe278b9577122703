#include "divlat/divisorial.hpp"

#include <algorithm>
#include <string>

namespace divlat {
namespace {

std::vector<Element> nonzero(const Lattice& L, const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (const auto& x : xs)
    if (x != L.bottom()) out.push_back(x);
  return out;
}

Verdict with_witness(Verdict v, std::vector<Element> w) {
  v.witness = std::move(w);
  return v;
}

// Meet of (x:y) over principal pairs with a <= (x:y), i.e. ay <= x.
Element principal_pair_meet(const Lattice& L, const Element& a, const std::vector<Element>& principals) {
  Element acc = L.top();
  for (const auto& y : principals) {
    const Element ay = L.mul(a, y);
    for (const auto& x : principals)
      if (L.leq(ay, x)) acc = L.meet(acc, L.residual(x, y));
  }
  return acc;
}

// First non-divisorial frame element with its closure, if any.
std::optional<std::pair<Element, Element>> first_non_divisorial(const ClosureEngine& E) {
  for (const auto& a : E.elements()) {
    const auto& av = E.closure(a);
    if (av != a) return std::make_pair(a, av);
  }
  return std::nullopt;
}

Verdict flag_divisorial(const ClosureEngine& E) {
  try {
    if (auto bad = first_non_divisorial(E))
      return Verdict::fails({bad->first, bad->second}, E.elements().size(),
                            "not divisorial: " + E.lattice().print(bad->first) + " has closure " +
                                E.lattice().print(bad->second));
    return Verdict::holds(E.elements().size());
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(0, e.what());
  }
}

// Gate for checks whose statement assumes a divisorial lattice.
std::optional<Verdict> require_divisorial(const ClosureEngine& E) {
  auto v = flag_divisorial(E);
  if (v.holds()) return std::nullopt;
  if (v.status == Status::FrameInsufficient) return v;
  return with_witness(Verdict::hypothesis_failed(v.checked_count, "lattice is not divisorial on the frame; " + v.note),
                      v.witness);
}

Verdict flag_lattice_domain(const Lattice& L, const SampleFrame& frame) {
  Tally t;
  if (!t.check(L.is_prime(L.bottom()), {L.bottom()}, "0 is not prime")) return t.verdict();
  const auto elems = thin_for_arity(L.enumerate(frame), 2, frame.tuple_budget);
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (!t.check(L.mul(x, y) != L.bottom() || x == L.bottom() || y == L.bottom(), {x, y}, "zero divisors"))
        return t.verdict();
  return t.verdict();
}

Verdict flag_valuation(const Lattice& L, const SampleFrame& frame) {
  Tally t;
  const auto elems = thin_for_arity(L.enumerate(frame), 2, frame.tuple_budget);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!t.check(L.leq(elems[i], elems[j]) || L.leq(elems[j], elems[i]), {elems[i], elems[j]}, "incomparable pair"))
        return t.verdict();
  return t.verdict();
}

Verdict flag_prufer(const Lattice& L, const std::vector<Element>& elems) {
  Tally t;
  for (const auto& c : elems)
    if (c != L.bottom() && L.is_compact(c) &&
        !t.check(L.is_principal(c), {c}, "compact element " + L.print(c) + " is not principal"))
      return t.verdict();
  return t.verdict();
}

Verdict flag_dedekind(const Lattice& L, const std::vector<Element>& elems) {
  Tally t;
  for (const auto& c : elems)
    if (!t.check(L.is_principal(c), {c}, L.print(c) + " is not principal")) return t.verdict();
  return t.verdict();
}

// (xc:c) = x for nonzero frame principals x and nonzero (compact) frame c.
Verdict flag_integrally_closed(const ClosureEngine& E, bool compact_only) {
  const auto& L = E.lattice();
  const auto& budget = E.frame().tuple_budget;
  const auto xs = thin_for_arity(E.principals(), 2, budget);
  const auto cs = thin_for_arity(nonzero(L, E.elements()), 2, budget);
  Tally t;
  for (const auto& c : cs) {
    if (compact_only && !L.is_compact(c)) continue;
    for (const auto& x : xs)
      if (!t.check(L.residual(L.mul(x, c), c) == x, {x, c}, "(xc:c) != x")) return t.verdict();
  }
  return t.verdict();
}

Verdict upgrade(Verdict v, bool asserted) {
  if (asserted && v.status == Status::HoldsOnFrame) v.status = Status::HoldsGlobally;
  return v;
}

bool maximals_principal(const Lattice& L, const SampleFrame& frame, std::vector<Element>& witness) {
  for (const auto& m : maximals_in_frame(L, frame))
    if (!L.is_principal(m)) {
      witness = {m};
      return false;
    }
  return true;
}

// A nonzero principal below c = a ^ b: from the frame, else x_a x_b <= ab <= c.
Element principal_under(const ClosureEngine& E, const Element& a, const Element& b, const Element& c) {
  if (auto x = E.first_principal_below(c)) return *x;
  auto xa = E.first_principal_below(a);
  auto xb = E.first_principal_below(b);
  if (!xa || !xb) throw FrameInsufficient("no frame principal below " + E.lattice().print(c));
  return E.lattice().mul(*xa, *xb);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

Verdict is_divisorial(const Lattice& L, const SampleFrame& frame) {
  return flag_divisorial(ClosureEngine(L, frame));
}

Element closure_via(const Lattice& L, const Element& a, const Element& x) {
  return L.residual(x, L.residual(x, a));
}

ClosureEngine::ClosureEngine(const Lattice& L, const SampleFrame& frame)
    : L_(L), frame_(frame), elements_(L.enumerate(frame)), principals_(L.enumerate_principals(frame)) {}

std::optional<Element> ClosureEngine::first_principal_below(const Element& a) const {
  if (a == L_.bottom()) return std::nullopt;
  for (const auto& x : principals_)
    if (L_.leq(x, a)) return x;
  return std::nullopt;
}

ClosureWitness ClosureEngine::witness(const Element& a) const {
  if (a == L_.bottom()) return {a, std::nullopt, std::nullopt, a};
  const auto x = first_principal_below(a);
  if (!x)
    throw FrameInsufficient("no nonzero principal element below " + L_.print(a) + " in the " +
                            std::string(L_.name()) + " frame");
  Element colon = L_.residual(*x, a);
  Element av = L_.residual(*x, colon);
  return {a, *x, std::move(colon), std::move(av)};
}

const Element& ClosureEngine::closure(const Element& a) const {
  auto it = cache_.find(a);
  if (it == cache_.end()) it = cache_.emplace(a, witness(a).closure).first;
  return it->second;
}

ClosureWitness v_closure(const Lattice& L, const Element& a, const SampleFrame& frame) {
  return ClosureEngine(L, frame).witness(a);
}

Element v_closure_oracle(const Lattice& L, const Element& a, const SampleFrame& frame) {
  const auto principals = L.enumerate_principals(frame);
  Element acc = L.top();
  for (const auto& x : principals)
    for (const auto& y : principals) {
      const Element r = L.residual(x, y);
      if (L.leq(a, r)) acc = L.meet(acc, r);
    }
  return acc;
}

Verdict check_lemma2(const Lattice& L, const Element& a, const Element& z, const SampleFrame& frame) {
  if (a == L.bottom() || z == L.bottom() || !L.is_principal(z))
    throw Error("check_lemma2 needs nonzero a and nonzero principal z");
  ClosureEngine E(L, frame);
  std::vector<Element> below;
  for (const auto& x : E.principals())
    if (L.leq(x, a)) below.push_back(x);
  if (below.size() < 2)
    return Verdict::insufficient(0, "fewer than two frame principals below " + L.print(a));
  Tally t;
  for (const auto& y : below)
    if (!t.check(L.mul(z, L.residual(y, a)) == L.residual(L.mul(z, y), a), {a, z, y}, "z(y:a) != (zy:a)"))
      return t.verdict();
  const Element first = closure_via(L, a, below.front());
  for (const auto& y : below)
    if (!t.check(closure_via(L, a, y) == first, {a, below.front(), y}, "(x:(x:a)) != (y:(y:a))"))
      return t.verdict();
  return t.verdict();
}

Verdict check_lemma2(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  Tally t;
  std::uint64_t eligible = 0;
  for (const auto& a : nonzero(L, E.elements())) {
    std::vector<Element> below;
    for (const auto& x : E.principals())
      if (L.leq(x, a)) below.push_back(x);
    if (below.size() < 2) continue;
    ++eligible;
    const Element first = closure_via(L, a, below.front());
    for (std::size_t i = 1; i < below.size(); ++i)
      if (!t.check(closure_via(L, a, below[i]) == first, {a, below.front(), below[i]}, "(x:(x:a)) != (y:(y:a))"))
        return t.verdict();
  }
  // z(y:a) = (zy:a) on a thinned sample of (a, z, y).
  const auto as = thin_for_arity(nonzero(L, E.elements()), 3, frame.tuple_budget);
  const auto zs = thin_for_arity(E.principals(), 3, frame.tuple_budget);
  for (const auto& a : as)
    for (const auto& y : zs) {
      if (!L.leq(y, a)) continue;
      for (const auto& z : zs)
        if (!t.check(L.mul(z, L.residual(y, a)) == L.residual(L.mul(z, y), a), {a, z, y}, "z(y:a) != (zy:a)"))
          return t.verdict();
    }
  return t.verdict(std::to_string(eligible) + " elements with at least two principals below");
}

Verdict check_prop81(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  const auto elems = nonzero(L, E.elements());
  Tally t;
  try {
    std::vector<Element> closures;
    std::vector<Element> chosen;
    closures.reserve(elems.size());
    for (const auto& a : elems) {
      const auto w = E.witness(a);
      chosen.push_back(*w.principal);
      closures.push_back(w.closure);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& a = elems[i];
      const auto& av = closures[i];
      // extensive, idempotent
      if (!t.check(L.leq(a, av), {a}, "a not below a_v")) return t.verdict();
      if (!t.check(closure_via(L, av, chosen[i]) == av, {a}, "(a_v)_v != a_v")) return t.verdict();
      for (const auto& x : E.principals()) {
        // (x:a) divisorial for principal x <= a; x itself lies below (x:a)
        if (L.leq(x, a)) {
          const Element c = L.residual(x, a);
          if (!t.check(closure_via(L, c, x) == c, {a, x}, "(x:a) not divisorial")) return t.verdict();
        }
        // (xa)_v = x a_v, closing xa through the principal x * chosen
        const Element xa = L.mul(x, a);
        if (!t.check(closure_via(L, xa, L.mul(x, chosen[i])) == L.mul(x, av), {x, a}, "(xa)_v != x a_v"))
          return t.verdict();
      }
    }
    for (const auto& x : E.principals())
      if (!t.check(closure_via(L, x, x) == x, {x}, "principal element not divisorial")) return t.verdict();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        // monotone
        if (L.leq(elems[i], elems[j]) &&
            !t.check(L.leq(closures[i], closures[j]), {elems[i], elems[j]}, "a <= b but a_v not <= b_v"))
          return t.verdict();
        // meets of divisorial elements, closed through the principal x_a x_b <= ab <= a ^ b
        if (j > i && closures[i] == elems[i] && closures[j] == elems[j]) {
          const Element c = L.meet(elems[i], elems[j]);
          if (!t.check(closure_via(L, c, L.mul(chosen[i], chosen[j])) == c, {elems[i], elems[j]},
                       "meet of divisorial elements not divisorial"))
            return t.verdict();
        }
      }
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  return t.verdict();
}

Verdict check_prop12(const Lattice& L, const SampleFrame& frame, bool doubling_probe) {
  ClosureEngine E(L, frame);
  std::vector<Element> probe;
  if (doubling_probe) probe = L.enumerate_principals(probe_frame(L.id(), frame));
  Tally t;
  std::optional<Verdict> insufficient;
  try {
    for (const auto& a : nonzero(L, E.elements())) {
      const Element& av = E.closure(a);
      const Element meet = principal_pair_meet(L, a, E.principals());
      if (!t.check(L.leq(av, meet), {a, meet}, "principal-pair meet lies below the closure")) return t.verdict();
      if (meet != av && !insufficient)
        insufficient = with_witness(Verdict::insufficient(0, "principal-pair meet above the closure for " + L.print(a)),
                                    {a, meet});
      for (const auto& y : probe) {
        const Element ay = L.mul(a, y);
        for (const auto& x : probe) {
          if (!L.leq(ay, x)) continue;
          const Element r = L.residual(x, y);
          if (!t.check(L.leq(av, r), {a, x, y}, "admissible (x:y) on the doubled frame lies below the closure"))
            return t.verdict();
          if (!L.leq(meet, r) && !insufficient)
            insufficient =
                with_witness(Verdict::insufficient(0, "doubled frame lowers the principal-pair meet of " + L.print(a)),
                             {a, x, y});
        }
      }
    }
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  if (insufficient) {
    insufficient->checked_count = t.checked();
    return *insufficient;
  }
  return t.verdict(doubling_probe ? "stable under the doubled frame" : "");
}

Verdict check_remark3(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  const auto elems = thin_for_arity(nonzero(L, E.elements()), 2, frame.tuple_budget);
  Tally t;
  try {
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const Element c = L.meet(a, b);
        Element x = principal_under(E, a, b, c);
        for (int round = 0; round < 2; ++round, x = L.mul(x, x)) {
          const Element xa = L.residual(x, a);
          const Element xb = L.residual(x, b);
          if (!t.check(L.leq(a, b) == L.leq(xb, xa), {a, b, x}, "a <= b but not (x:b) <= (x:a), or conversely"))
            return t.verdict();
          if (!t.check((a == b) == (xa == xb), {a, b, x}, "(x:a) = (x:b) does not match a = b")) return t.verdict();
        }
      }
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  return t.verdict();
}

Verdict check_lemma4(const Lattice& L, std::span<const Element> family, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  const Element m = L.meet(family);
  Tally t;
  for (const auto& x : E.principals()) {
    if (!L.leq(x, m)) continue;
    std::vector<Element> parts;
    for (const auto& a : family) parts.push_back(L.residual(x, a));
    std::vector<Element> witness(family.begin(), family.end());
    witness.push_back(x);
    if (!t.check(L.residual(x, m) == L.join(parts), witness, "(x : meet) != join of (x : a_i)")) return t.verdict();
  }
  if (t.checked() == 0) return Verdict::insufficient(0, "no frame principal below the meet of the family");
  return t.verdict();
}

Verdict check_lemma4(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  const auto elems = thin_for_arity(nonzero(L, E.elements()), 2, frame.tuple_budget);
  Tally t;
  try {
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const Element m = L.meet(a, b);
        const Element x = principal_under(E, a, b, m);
        if (!t.check(L.residual(x, m) == L.join(L.residual(x, a), L.residual(x, b)), {a, b, x},
                     "(x : a ^ b) != (x:a) v (x:b)"))
          return t.verdict();
      }
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  return t.verdict();
}

namespace {

Element candidate_meet(const Lattice& L, const Element& a, const Element& p, const std::vector<Element>& elems) {
  Element acc = L.top();
  for (const auto& b : elems)
    if (L.leq(a, b) && !L.leq(b, p)) acc = L.meet(acc, b);
  return acc;
}

Element a_of_p_impl(const Lattice& L, const Element& a, const Element& p, const std::vector<Element>& elems,
                    const std::vector<Element>& probe) {
  if (a == L.bottom() || a == L.top()) throw Error("a(p) needs a different from 0 and 1");
  if (!L.is_maximal(p)) throw Error("a(p): " + L.print(p) + " is not maximal");
  if (!L.leq(a, p)) throw Error("a(p): " + L.print(a) + " is not below " + L.print(p));
  if (L.id() == BackendId::DedekindInt) {
    auto n = a.as<DedekindIntElement>().n;
    const auto q = p.as<DedekindIntElement>().n;
    while (n % q == 0) n /= q;
    return DedekindIntElement{n};
  }
  Element result = candidate_meet(L, a, p, elems);
  if (!probe.empty() && candidate_meet(L, a, p, probe) != result)
    throw FrameInsufficient("a(p) for " + L.print(a) + " changes on the doubled frame");
  return result;
}

} // namespace

Element a_of_p(const Lattice& L, const Element& a, const Element& p, const SampleFrame& frame) {
  if (L.id() == BackendId::DedekindInt) return a_of_p_impl(L, a, p, {}, {});
  return a_of_p_impl(L, a, p, L.enumerate(frame), L.enumerate(probe_frame(L.id(), frame)));
}

Verdict check_theorem5_prime(const Lattice& L, const Element& a, const Element& p, const SampleFrame& frame) {
  if (a == L.bottom() || !L.is_prime(a)) throw Error("check_theorem5_prime needs a nonzero prime a");
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  try {
    const Element r = a_of_p(L, a, p, frame);
    Tally t;
    t.check(r == L.top(), {a, p, r}, "a(p) != 1 for prime a");
    return t.verdict();
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(0, e.what());
  }
}

Verdict check_theorem5(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  const auto& elems = E.elements();
  const auto probe = L.id() == BackendId::DedekindInt ? std::vector<Element>{} : L.enumerate(probe_frame(L.id(), frame));
  Tally t;
  try {
    for (const auto& a : elems) {
      if (a == L.bottom() || a == L.top()) continue;
      const auto maxs = L.maximals_above(a);
      std::vector<Element> parts;
      for (const auto& p : maxs) {
        const Element r = a_of_p_impl(L, a, p, elems, probe);
        parts.push_back(r);
        if (!t.check(!L.leq(r, p), {a, p, r}, "a(p) lies below p")) return t.verdict();
        if (!t.check(L.leq(a, r), {a, p, r}, "a(p) not above a")) return t.verdict();
        for (const auto& b : elems)
          if (L.leq(a, b) && !L.leq(b, p) && !t.check(L.leq(r, b), {a, p, b}, "a(p) not minimal in the frame"))
            return t.verdict();
        if (L.is_prime(a) && !t.check(r == L.top(), {a, p, r}, "a(p) != 1 for prime a")) return t.verdict();
      }
      if (!t.check(L.join(parts) == L.top(), {a}, "join of a(p) over maximals p >= a is not 1")) return t.verdict();
    }
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  return t.verdict();
}

Verdict is_h_local(const Lattice& L, const SampleFrame& frame) {
  const auto elems = L.enumerate(frame);
  const auto frame_maximals = maximals_in_frame(L, frame);
  Tally t;
  for (const auto& b : elems) {
    if (b == L.bottom()) continue;
    std::vector<Element> maxs;
    try {
      maxs = L.maximals_above(b);
    } catch (const Unsupported&) {
      t.fail({b}, "infinitely many maximal elements above " + L.print(b));
      return t.verdict();
    }
    for (const auto& m : maxs)
      if (!t.check(L.is_maximal(m) && L.leq(b, m), {b, m}, "maximals_above returned a wrong element"))
        return t.verdict();
    for (const auto& m : frame_maximals)
      if (L.leq(b, m) && !t.check(std::find(maxs.begin(), maxs.end(), m) != maxs.end(), {b, m},
                                  "maximals_above misses a frame maximal"))
        return t.verdict();
    if (L.is_prime(b) && !t.check(maxs.size() == 1, {b}, "nonzero prime below more than one maximal"))
      return t.verdict();
  }
  return t.verdict();
}

Classification classify(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  const auto& d = L.descriptor();
  Classification c;
  // Every shipped backend is a lattice domain by construction.
  c.lattice_domain = upgrade(flag_lattice_domain(L, frame), true);
  c.divisorial = upgrade(flag_divisorial(E), d.dedekind);
  c.h_local = upgrade(is_h_local(L, frame), d.local || d.dedekind);
  c.prufer = upgrade(flag_prufer(L, E.elements()), d.dedekind || d.valuation);
  c.valuation = upgrade(flag_valuation(L, frame), d.valuation);
  c.integrally_closed = upgrade(flag_integrally_closed(E, true), d.dedekind || d.valuation);
  c.completely_integrally_closed = upgrade(flag_integrally_closed(E, false), d.dedekind);
  c.dedekind = upgrade(flag_dedekind(L, E.elements()), d.dedekind);
  return c;
}

Verdict check_classification(const Classification& c) {
  Tally t;
  auto implies = [&t](const Verdict& a, const Verdict& b, const char* what) {
    if (a.holds() && b.failed()) return t.fail(b.witness, what);
    t.pass();
    return true;
  };
  implies(c.dedekind, c.completely_integrally_closed, "dedekind but not completely integrally closed") &&
      implies(c.completely_integrally_closed, c.integrally_closed, "cic but not integrally closed") &&
      implies(c.prufer, c.integrally_closed, "prufer but not integrally closed") &&
      implies(c.divisorial, c.h_local, "divisorial but not h-local") &&
      implies(c.dedekind, c.divisorial, "dedekind but not divisorial") &&
      implies(c.valuation, c.prufer, "valuation but not prufer");
  return t.verdict();
}

Verdict check_lemma9(const Lattice& L, const Element& c, const SampleFrame& frame) {
  if (c == L.bottom()) throw Error("check_lemma9 needs c != 0");
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  std::uint64_t checked = 0;
  for (const auto& z : E.principals()) {
    ++checked;
    const Element back = L.residual(L.mul(c, z), c);
    if (back != z)
      return with_witness(Verdict::hypothesis_failed(checked, "(cz:c) = " + L.print(back) + " != " + L.print(z)),
                          {c, z});
  }
  Tally t;
  t.check(L.is_principal(c), {c}, "(cz:c) = z for all principals z, yet c is not principal");
  return t.verdict();
}

Verdict check_lemma9(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  if (auto gate = require_divisorial(E)) return *gate;
  const auto zs = thin_for_arity(E.principals(), 2, frame.tuple_budget);
  const auto cs = thin_for_arity(nonzero(L, E.elements()), 2, frame.tuple_budget);
  Tally t;
  std::uint64_t applicable = 0;
  for (const auto& c : cs) {
    const bool hypothesis =
        std::all_of(zs.begin(), zs.end(), [&](const Element& z) { return L.residual(L.mul(c, z), c) == z; });
    if (!hypothesis) continue;
    ++applicable;
    if (!t.check(L.is_principal(c), {c}, "(cz:c) = z for all principals z, yet c is not principal"))
      return t.verdict();
  }
  return t.verdict(std::to_string(applicable) + " elements satisfy the hypothesis");
}

Verdict check_lemma14(const Lattice& L, const SampleFrame& frame) {
  auto valuation = flag_valuation(L, frame);
  if (!valuation.holds())
    return with_witness(Verdict::hypothesis_failed(valuation.checked_count, "not a valuation lattice"),
                        valuation.witness);
  const auto maxs = maximals_in_frame(L, frame);
  if (maxs.size() != 1) return Verdict::insufficient(0, "frame does not contain exactly one maximal element");
  const auto& m = maxs.front();
  ClosureEngine E(L, frame);
  const auto div = flag_divisorial(E);
  if (div.status == Status::FrameInsufficient) return div;
  const bool principal = L.is_principal(m);
  std::vector<Element> witness{m};
  std::string note = "m principal: " + yes_no(principal) + ", divisorial: " + yes_no(div.holds());
  if (!div.holds()) {
    const Element& mv = E.closure(m);
    witness.push_back(mv);
    note += ", m_v = " + L.print(mv);
  }
  if (div.holds() != principal) return Verdict::fails(witness, div.checked_count, note);
  return with_witness(Verdict::holds(div.checked_count + 1, note), witness);
}

Verdict check_theorem10(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  const auto ic = flag_integrally_closed(E, true);
  if (!ic.holds())
    return with_witness(Verdict::hypothesis_failed(ic.checked_count, "not integrally closed: " + ic.note), ic.witness);
  const auto div = flag_divisorial(E);
  const auto prufer = flag_prufer(L, E.elements());
  const auto hl = is_h_local(L, frame);
  if (div.status == Status::FrameInsufficient) return div;
  std::vector<Element> max_witness;
  const bool maxp = maximals_principal(L, frame, max_witness);
  const bool right = prufer.holds() && hl.holds() && maxp;
  const std::string note = "divisorial: " + yes_no(div.holds()) + ", prufer: " + yes_no(prufer.holds()) +
                           ", h-local: " + yes_no(hl.holds()) + ", maximals principal: " + yes_no(maxp);
  const auto checked = ic.checked_count + div.checked_count + prufer.checked_count + hl.checked_count;
  if (div.holds() != right) {
    std::vector<Element> w = div.witness;
    for (const auto* v : {&prufer, &hl})
      if (w.empty()) w = v->witness;
    if (w.empty()) w = max_witness;
    if (w.empty()) w = {L.top()};
    return Verdict::fails(w, checked, note);
  }
  return Verdict::holds(checked, note);
}

Verdict check_cic_theorem(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  const auto cic = flag_integrally_closed(E, false);
  if (!cic.holds())
    return with_witness(Verdict::hypothesis_failed(cic.checked_count, "not completely integrally closed: " + cic.note),
                        cic.witness);
  const auto div = flag_divisorial(E);
  if (div.status == Status::FrameInsufficient) return div;
  const auto ded = flag_dedekind(L, E.elements());
  const std::string note = "divisorial: " + yes_no(div.holds()) + ", dedekind: " + yes_no(ded.holds());
  const auto checked = cic.checked_count + div.checked_count + ded.checked_count;
  if (div.holds() != ded.holds()) {
    auto w = div.witness.empty() ? ded.witness : div.witness;
    return Verdict::fails(w, checked, note);
  }
  return with_witness(Verdict::holds(checked, note), div.witness);
}

Verdict check_theorem11(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  const auto div = flag_divisorial(E);
  if (div.status == Status::FrameInsufficient) return div;
  const auto hl = is_h_local(L, frame);
  const auto checked = div.checked_count + hl.checked_count;
  if (div.holds()) {
    if (hl.failed()) return Verdict::fails(hl.witness, checked, "divisorial but not h-local: " + hl.note);
    return Verdict::holds(checked, "divisorial and h-local");
  }
  // Not divisorial: the implication holds vacuously. The witness records why.
  return with_witness(Verdict::holds(checked, std::string("not divisorial, h-local: ") + (hl.holds() ? "yes" : "no") +
                                                  "; " + div.note),
                      div.witness);
}

Verdict check_example15(const Lattice& L, const SampleFrame& frame) {
  ClosureEngine E(L, frame);
  for (const auto& m : maximals_in_frame(L, frame)) {
    const Element m2 = L.mul(m, m);
    if (m2 == L.bottom()) continue;
    for (const auto& x : E.principals()) {
      if (!L.lt(m2, x) || !L.lt(x, m)) continue;
      Tally t;
      try {
        t.check(L.residual(x, m) == m, {m, x}, "(x:m) != m") &&
            t.check(E.closure(m) == m, {m, x}, "m is not divisorial");
      } catch (const FrameInsufficient& e) {
        return Verdict::insufficient(t.checked(), e.what());
      }
      auto v = t.verdict("m = " + L.print(m) + ", x = " + L.print(x));
      if (v.holds()) v.witness = {m, x};
      return v;
    }
  }
  return Verdict::hypothesis_failed(0, "no maximal m and principal x with m^2 < x < m in the frame");
}

Verdict check_example_numsg(const Lattice& L, const SampleFrame& frame) {
  if (L.id() != BackendId::NumSg) return Verdict::hypothesis_failed(0, "applies to numsg only");
  ClosureEngine E(L, frame);
  Tally t;
  try {
    const Element s23 = L.parse("1*<2,3>");
    if (!t.check(E.closure(s23) == L.top(), {s23}, "(1*<2,3>)_v != 1")) return t.verdict();
    for (const auto& a : nonzero(L, E.elements())) {
      const Element expected = NumSgElement::principal(a.as<NumSgElement>().scale);
      if (!t.check(E.closure(a) == expected, {a}, "(d*S)_v != d*<1>")) return t.verdict();
      if (!t.check(E.is_divisorial(a) == L.is_principal(a), {a}, "divisorial does not match principal"))
        return t.verdict();
    }
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  return t.verdict();
}

Verdict check_example17(const Lattice& L, const SampleFrame& frame) {
  if (L.id() != BackendId::Ex17) return Verdict::hypothesis_failed(0, "applies to ex17 only");
  const Element a = L.parse("a"), b = L.parse("b"), c = L.parse("c"), m = L.parse("m");
  Tally t;
  auto eq = [&](const Element& x, const Element& y, const char* what) { return t.check(x == y, {x, y}, what); };
  if (!(eq(L.mul(a, a), L.mul(b, c), "a^2 != bc") && eq(L.mul(b, b), L.mul(a, c), "b^2 != ac") &&
        eq(L.mul(c, c), L.mul(a, b), "c^2 != ab") && eq(L.mul(m, m), L.mul(a, m), "m^2 != am") &&
        eq(L.mul(b, m), L.mul(a, m), "bm != am") && eq(L.mul(c, m), L.mul(a, m), "cm != am") &&
        eq(L.residual(a, m), m, "(a:m) != m") && t.check(!L.is_principal(m), {m}, "m is principal")))
    return t.verdict();

  // 1 > m > a,b,c > am > a^2,ab,ac > a^2 m > ...
  std::vector<std::vector<Element>> ranks{{L.top()}};
  for (std::uint32_t n = 0; n < frame.max_deg; ++n) {
    ranks.push_back({Ex17Element::m_level(n)});
    ranks.push_back({Ex17Element::principal(n + 1, 0), Ex17Element::principal(n + 1, 1),
                     Ex17Element::principal(n + 1, 2)});
  }
  for (std::size_t r = 0; r + 1 < ranks.size(); ++r) {
    for (const auto& hi : ranks[r])
      for (const auto& lo : ranks[r + 1])
        if (!t.check(L.lt(lo, hi), {lo, hi}, "displayed order violated")) return t.verdict();
    for (const auto& x : ranks[r])
      for (const auto& y : ranks[r])
        if (x != y && !t.check(!L.leq(x, y), {x, y}, "same-rank elements comparable")) return t.verdict();
  }

  ClosureEngine E(L, frame);
  try {
    for (const auto& x : E.elements())
      if (!t.check(E.is_divisorial(x), {x, E.closure(x)}, "element not divisorial")) return t.verdict();
  } catch (const FrameInsufficient& e) {
    return Verdict::insufficient(t.checked(), e.what());
  }
  return t.verdict();
}

} // namespace divlat
