#include "divlat/element.hpp"
#include "divlat/error.hpp"
#include "divlat/verdict.hpp"

#include <string>

namespace divlat {

std::string_view backend_name(BackendId id) {
  switch (id) {
  case BackendId::DvrChain: return "dvr-chain";
  case BackendId::DedekindInt: return "dedekind-int";
  case BackendId::RatVal: return "ratval";
  case BackendId::NumSg: return "numsg";
  case BackendId::Ex17: return "ex17";
  }
  return "unknown";
}

BackendId backend_from_name(std::string_view name) {
  for (auto id : kAllBackends)
    if (backend_name(id) == name) return id;
  throw ParseError("unknown backend '" + std::string(name) + "'");
}

std::string_view status_name(Status s) {
  switch (s) {
  case Status::HoldsOnFrame: return "holds-on-frame";
  case Status::HoldsGlobally: return "holds-globally";
  case Status::Fails: return "fails";
  case Status::FrameInsufficient: return "frame-insufficient";
  case Status::HypothesisFailed: return "hypothesis-failed";
  case Status::ExpectedCounterexample: return "expected-counterexample";
  }
  return "unknown";
}

} // namespace divlat
