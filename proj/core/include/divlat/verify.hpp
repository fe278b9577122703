#pragma once

#include "divlat/lattice.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace divlat {

/// A runnable suite id and the statement it checks.
struct SuiteEntry {
  std::string_view id;
  std::string_view statement;
};

/// Every suite id, in canonical order.
const std::vector<SuiteEntry>& suite_registry();

/// Comma-separated ids ("all" expands to the registry). Throws ParseError on an unknown id.
std::vector<std::string> parse_suite_ids(std::string_view csv);
/// Comma-separated backend names ("all" expands to every backend). Throws ParseError.
std::vector<BackendId> parse_backends(std::string_view csv);

struct SuiteSpec {
  std::vector<std::string> ids;
  std::vector<BackendId> backends;
  SampleFrame frame;
  bool doubling_probe = true;
};

struct Certificate {
  std::string suite;
  BackendId backend = BackendId::DvrChain;
  SampleFrame frame;
  Status status = Status::HoldsOnFrame;
  std::vector<std::string> witnesses;  // printed with the backend grammar
  std::uint64_t checked_count = 0;
  std::int64_t millis = 0;
  std::string version;
  std::string note;  // human-readable detail; not serialized
};

std::string_view toolkit_version();

/// Runs one suite id on one backend. Throws ParseError for an unknown id.
Verdict run_check(std::string_view id, const Lattice& L, const SampleFrame& frame, bool doubling_probe = true);

/// Runs every (id, backend) job, in parallel, and returns certificates
/// ordered by (suite id, backend id).
std::vector<Certificate> run_suite(const SuiteSpec& spec);

/// True when some certificate reports a refuted statement.
bool suite_failed(const std::vector<Certificate>& certs);

/// Re-runs the certificate's check on its recorded frame; true when status and witnesses match.
bool replay(const Certificate& cert);

/// Fields exactly: suite, backend, frame, status, witnesses, checked_count, millis, version.
std::string to_json(const Certificate& cert);
/// JSON array of certificates, two-space indented, newline terminated.
std::string to_json(const std::vector<Certificate>& certs);

/// JSON object with every bound of the frame.
std::string frame_to_json(const SampleFrame& frame);

} // namespace divlat
