#include "divlat/lattice.hpp"

#include <algorithm>

namespace divlat {

void Lattice::require(const Element& x) const {
  if (x.backend() != id())
    throw BackendMismatch("element of backend " + std::string(backend_name(x.backend())) + " passed to " +
                          std::string(name()));
}

Element Lattice::join(std::span<const Element> xs) const {
  Element acc = bottom();
  for (const auto& x : xs) acc = join(acc, x);
  return acc;
}

Element Lattice::meet(std::span<const Element> xs) const {
  Element acc = top();
  for (const auto& x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<Element> Lattice::enumerate_principals(const SampleFrame& frame) const {
  std::vector<Element> out;
  for (auto& x : enumerate(frame))
    if (x != bottom() && is_principal(x)) out.push_back(std::move(x));
  return out;
}

std::vector<Element> principal_below(const Lattice& L, const Element& a, const SampleFrame& frame) {
  std::vector<Element> out;
  if (a == L.bottom()) return out;
  for (auto& x : L.enumerate_principals(frame))
    if (L.leq(x, a)) out.push_back(std::move(x));
  if (out.empty())
    throw FrameInsufficient("no nonzero principal element below " + L.print(a) + " in the " +
                            std::string(L.name()) + " frame");
  return out;
}

std::vector<Element> maximals_in_frame(const Lattice& L, const SampleFrame& frame) {
  std::vector<Element> out;
  for (auto& x : L.enumerate(frame))
    if (L.is_maximal(x)) out.push_back(std::move(x));
  return out;
}

bool principal_identities_hold(const Lattice& L, const Element& x, const Element& y, const Element& z) {
  const bool meet_principal = L.meet(y, L.mul(z, x)) == L.mul(L.meet(L.residual(y, x), z), x);
  const bool join_principal = L.join(y, L.residual(z, x)) == L.residual(L.join(L.mul(y, x), z), x);
  return meet_principal && join_principal;
}

Verdict check_principal_definition(const Lattice& L, const Element& x, const SampleFrame& frame) {
  const auto elems = thin_for_arity(L.enumerate(frame), 2, frame.tuple_budget);
  Tally tally;
  for (const auto& y : elems) {
    for (const auto& z : elems) {
      if (!tally.check(principal_identities_hold(L, x, y, z), {x, y, z}, "principal identity fails for (y, z)"))
        return tally.verdict();
    }
  }
  return tally.verdict();
}

namespace {

// One named family of instances inside the axioms suite.
struct AxiomRun {
  Tally tally;
  std::string failed_law;

  bool check(bool ok, std::initializer_list<Element> witness, const char* law) {
    if (ok) {
      tally.pass();
      return true;
    }
    if (!tally.failed()) failed_law = law;
    return tally.fail(std::vector<Element>(witness), law);
  }
};

} // namespace

Verdict axioms_suite(const Lattice& L, const SampleFrame& frame) {
  const auto all = L.enumerate(frame);
  const auto pairs = thin_for_arity(all, 2, frame.tuple_budget);
  const auto triples = thin_for_arity(all, 3, frame.tuple_budget);
  const auto zero = L.bottom();
  const auto one = L.top();
  AxiomRun run;

  auto done = [&] { return run.tally.failed(); };
  auto finish = [&]() {
    if (run.tally.failed()) return run.tally.verdict();
    return run.tally.verdict("pairs over " + std::to_string(pairs.size()) + " and triples over " +
                             std::to_string(triples.size()) + " of " + std::to_string(all.size()) +
                             " frame elements");
  };

  // Single elements: bounds, identities, compact/principal corners.
  run.check(L.is_prime(zero), {zero}, "0 is prime");
  run.check(L.is_compact(one), {one}, "1 is compact");
  run.check(L.is_compact(zero), {zero}, "0 is compact");
  for (const auto& x : all) {
    run.check(L.leq(zero, x) && L.leq(x, one), {x}, "0 <= x <= 1");
    run.check(L.mul(x, one) == x, {x}, "1 is the identity");
    run.check(L.mul(x, zero) == zero, {x}, "0 annihilates");
    run.check(L.residual(x, zero) == one, {x}, "(x:0) = 1");
    run.check(L.residual(x, one) == x, {x}, "(x:1) = x");
    run.check(!L.is_principal(x) || L.is_compact(x), {x}, "principal implies compact");
    run.check(!L.is_maximal(x) || L.is_prime(x), {x}, "maximal implies prime");
    if (done()) return finish();
  }

  // Pairs: order, commutativity, lattice bounds, zero divisors, C-lattice
  // closure and the principal factor property.
  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      const bool xy = L.leq(x, y);
      const bool yx = L.leq(y, x);
      run.check(!(xy && yx) || x == y, {x, y}, "antisymmetry");
      const auto p = L.mul(x, y);
      run.check(p == L.mul(y, x), {x, y}, "commutativity");
      const auto j = L.join(x, y);
      const auto m = L.meet(x, y);
      run.check(L.leq(x, j) && L.leq(y, j), {x, y}, "join is an upper bound");
      run.check(L.leq(m, x) && L.leq(m, y), {x, y}, "meet is a lower bound");
      run.check(xy == (j == y) && xy == (m == x), {x, y}, "join/meet consistent with order");
      run.check(x == zero || y == zero || p != zero, {x, y}, "no zero divisors");
      run.check(L.leq(L.mul(x, L.residual(y, x)), y), {x, y}, "x (y:x) <= y");
      if (L.is_compact(x) && L.is_compact(y)) run.check(L.is_compact(p), {x, y}, "compacts closed under product");
      const bool px = L.is_principal(x);
      const bool py = L.is_principal(y);
      if (px && py) run.check(L.is_principal(p), {x, y}, "product of principals is principal");
      if (p != zero && L.is_principal(p)) run.check(px && py, {x, y}, "factors of a nonzero principal are principal");
      if (done()) return finish();
    }
  }

  // Every element is the join of the principal elements below it: anything
  // that does not lie above a is missed by some principal x <= a.
  const auto wide = frame.doubled();
  const auto gens = L.enumerate_principals(wide);
  for (const auto& a : pairs) {
    std::vector<Element> below;
    for (const auto& x : gens)
      if (L.leq(x, a)) below.push_back(x);
    for (const auto& u : pairs) {
      if (L.leq(a, u)) continue;
      const bool separated = std::any_of(below.begin(), below.end(), [&](const Element& x) { return !L.leq(x, u); });
      run.check(separated, {a, u}, "principally generated");
    }
    if (done()) return finish();
  }

  // Cancellation by nonzero principal elements: y -> xy is injective.
  for (const auto& x : L.enumerate_principals(frame)) {
    std::vector<std::pair<Element, Element>> image;
    image.reserve(all.size());
    for (const auto& y : all) image.emplace_back(L.mul(x, y), y);
    std::sort(image.begin(), image.end());
    for (std::size_t i = 1; i < image.size(); ++i)
      run.check(image[i - 1].first != image[i].first, {x, image[i - 1].second, image[i].second}, "cancellative");
    if (done()) return finish();
  }

  // Triples: associativity, transitivity, order compatibility,
  // distributivity, least/greatest bounds and residuation. Pairwise values
  // are tabulated once.
  const std::size_t n = triples.size();
  std::vector<Element> prod(n * n), res(n * n);
  std::vector<char> le(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      prod[i * n + j] = L.mul(triples[i], triples[j]);
      res[i * n + j] = L.residual(triples[i], triples[j]);
      le[i * n + j] = L.leq(triples[i], triples[j]);
    }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = triples[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = triples[j];
      const auto& ab = prod[i * n + j];
      const bool a_le_b = le[i * n + j];
      const auto jab = L.join(a, b);
      const auto mab = L.meet(a, b);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = triples[k];
        run.check(L.mul(ab, c) == L.mul(a, prod[j * n + k]), {a, b, c}, "associativity");
        run.check(!(a_le_b && le[j * n + k]) || le[i * n + k], {a, b, c}, "transitivity");
        run.check(!a_le_b || L.leq(prod[i * n + k], prod[j * n + k]), {a, b, c}, "order compatibility");
        run.check(L.mul(c, jab) == L.join(prod[k * n + i], prod[k * n + j]), {c, a, b}, "distributivity");
        if (le[i * n + k] && le[j * n + k]) run.check(L.leq(jab, c), {a, b, c}, "join is least");
        if (le[k * n + i] && le[k * n + j]) run.check(L.leq(c, mab), {a, b, c}, "meet is greatest");
        run.check(L.leq(ab, c) == L.leq(a, res[k * n + j]), {a, b, c}, "residual adjunction");
        if (done()) return finish();
      }
    }
  }
  return finish();
}

} // namespace divlat
