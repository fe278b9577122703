#pragma once

#include "divlat/lattice.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace divlat::detail {

const Lattice& dvr_chain_lattice();
const Lattice& dedekind_int_lattice();
const Lattice& ratval_lattice();
const Lattice& numsg_lattice();
const Lattice& ex17_lattice();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// Parses a non-negative decimal integer occupying all of `text`.
std::uint64_t parse_decimal(std::string_view text, std::string_view what);

std::string_view trim(std::string_view s);

/// Common base giving typed access to a backend's payload.
template <class P>
class TypedLattice : public Lattice {
protected:
  const P& get(const Element& e) const {
    require(e);
    return e.as<P>();
  }
  [[noreturn]] void not_prime(const Element& p) const {
    throw Error("localize: " + print(p) + " is not a prime element of " + std::string(name()));
  }
};

} // namespace divlat::detail
