#include "divlat/frame.hpp"

#include <cmath>

namespace divlat {

SampleFrame SampleFrame::doubled() const {
  SampleFrame f = *this;
  f.max_exp *= 2;
  f.max_int *= 2;
  f.max_num *= 2;
  f.max_den *= 2;
  f.max_frob *= 2;
  f.max_scale *= 2;
  f.max_deg *= 2;
  return f;
}

SampleFrame probe_frame(BackendId id, const SampleFrame& frame) {
  SampleFrame f = frame.doubled();
  if (id == BackendId::NumSg) f.max_frob = frame.max_frob;
  return f;
}

SampleFrame oracle_frame() {
  SampleFrame f;
  f.max_exp = 20;
  f.max_int = 60;
  f.max_num = 4;
  f.max_den = 4;
  f.max_frob = 11;
  f.max_scale = 2;
  f.max_deg = 5;
  f.tuple_budget = 100'000'000;
  return f;
}

std::vector<Element> thin_for_arity(const std::vector<Element>& elements, unsigned arity, std::uint64_t budget) {
  const auto n = elements.size();
  std::uint64_t size = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(budget), 1.0 / arity)));
  while (size > 0 && std::pow(static_cast<double>(size + 1), arity) <= static_cast<double>(budget)) ++size;
  while (size > 0 && std::pow(static_cast<double>(size), arity) > static_cast<double>(budget)) --size;
  if (n <= size) return elements;
  if (size < 2) size = 2;

  std::vector<Element> out(elements.begin(), elements.begin() + 2);
  const auto rest = n - 2;
  const auto want = size - 2;
  for (std::uint64_t i = 0; i < want; ++i) out.push_back(elements[2 + i * rest / want]);
  return out;
}

} // namespace divlat
