#include "backend_impl.hpp"

#include <charconv>
#include <limits>

namespace divlat {

const Lattice& lattice(BackendId id) {
  switch (id) {
  case BackendId::DvrChain: return detail::dvr_chain_lattice();
  case BackendId::DedekindInt: return detail::dedekind_int_lattice();
  case BackendId::RatVal: return detail::ratval_lattice();
  case BackendId::NumSg: return detail::numsg_lattice();
  case BackendId::Ex17: return detail::ex17_lattice();
  }
  throw Error("unknown backend id");
}

namespace detail {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice product");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice product");
  return r;
}

std::uint64_t parse_decimal(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  if (text.empty()) throw ParseError("expected " + std::string(what) + ", got empty text");
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("expected " + std::string(what) + ", got '" + std::string(text) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace detail
} // namespace divlat
