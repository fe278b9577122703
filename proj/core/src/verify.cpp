#include "divlat/verify.hpp"

#include "divlat/divisorial.hpp"
#include "divlat/localization.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <future>

#ifndef DIVLAT_VERSION
#define DIVLAT_VERSION "0.0.0"
#endif

namespace divlat {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string_view> split_csv(std::string_view csv) {
  std::vector<std::string_view> out;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    auto item = csv.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

// Primes used by the localization-rules suite: the first three nonzero frame
// primes, plus the maximal element of a local backend.
std::vector<Element> rule_primes(const Lattice& L, const SampleFrame& frame) {
  std::vector<Element> out;
  for (const auto& x : L.enumerate(frame)) {
    if (out.size() == 3) break;
    if (x != L.bottom() && L.is_prime(x)) out.push_back(x);
  }
  if (L.descriptor().local)
    for (const auto& m : maximals_in_frame(L, frame))
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  return out;
}

Verdict localization_rules(const Lattice& L, const SampleFrame& frame) {
  Verdict combined = Verdict::holds(0);
  for (const auto& p : rule_primes(L, frame)) {
    auto v = check_localization_rules(L, frame, p);
    combined.checked_count += v.checked_count;
    if (!v.holds()) {
      v.checked_count = combined.checked_count;
      return v;
    }
  }
  return combined;
}

json frame_json(const SampleFrame& f) {
  return json{{"max_exp", f.max_exp},   {"max_int", f.max_int},     {"max_num", f.max_num},
              {"max_den", f.max_den},   {"max_frob", f.max_frob},   {"max_scale", f.max_scale},
              {"max_deg", f.max_deg},   {"tuple_budget", f.tuple_budget}};
}

json cert_json(const Certificate& c) {
  return json{{"suite", c.suite},
              {"backend", backend_name(c.backend)},
              {"frame", frame_json(c.frame)},
              {"status", status_name(c.status)},
              {"witnesses", c.witnesses},
              {"checked_count", c.checked_count},
              {"millis", c.millis},
              {"version", c.version}};
}

} // namespace

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> registry{
      {"axioms", "lattice-domain axioms: order, monoid, residuation, distributivity, 0 prime, principal generation"},
      {"lemma2", "z(y:a) = (zy:a) and the closure (x:(x:a)) is independent of the principal x <= a"},
      {"prop81", "closure-operator laws of the divisorial closure"},
      {"remark3", "in a divisorial lattice a <= b iff (x:b) <= (x:a)"},
      {"lemma4", "in a divisorial lattice (x : meet a_i) = join (x : a_i)"},
      {"prop12", "a_v is the meet of the (x:y) above a over principal x, y"},
      {"theorem5", "a(p) exists and is not below p; a(p) = 1 for prime a"},
      {"theorem11", "a divisorial lattice domain is h-local"},
      {"theorem8", "divisorial iff h-local with every L_m divisorial"},
      {"lemma9", "(cz:c) = z for all principal z makes c principal in a divisorial lattice"},
      {"cic-theorem", "a completely integrally closed lattice domain is divisorial iff Dedekind"},
      {"lemma14", "a valuation lattice is divisorial iff its maximal element is principal"},
      {"theorem10", "an integrally closed lattice domain is divisorial iff Prufer, h-local, maximals principal"},
      {"example15", "m^2 < x < m with x principal gives m = (x:m) divisorial"},
      {"example-numsg", "in the ideal lattice of N only principal ideals are divisorial"},
      {"example17", "relations and order of the local quadratic order lattice; m = (a:m) divisorial"},
      {"localization-rules", "localization rules: extensive, idempotent, meets, x_p = 1 iff x not below p, residuals"},
  };
  return registry;
}

std::vector<std::string> parse_suite_ids(std::string_view csv) {
  std::vector<std::string> out;
  for (const auto item : split_csv(csv)) {
    if (item == "all") {
      for (const auto& e : suite_registry()) out.emplace_back(e.id);
      continue;
    }
    const auto& reg = suite_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const SuiteEntry& e) { return e.id == item; }))
      throw ParseError("unknown suite id '" + std::string(item) + "'");
    out.emplace_back(item);
  }
  if (out.empty()) throw ParseError("empty suite id list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BackendId> parse_backends(std::string_view csv) {
  std::vector<BackendId> out;
  for (const auto item : split_csv(csv)) {
    if (item == "all") {
      out.insert(out.end(), kAllBackends.begin(), kAllBackends.end());
      continue;
    }
    out.push_back(backend_from_name(item));
  }
  if (out.empty()) throw ParseError("empty backend list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view toolkit_version() { return DIVLAT_VERSION; }

Verdict run_check(std::string_view id, const Lattice& L, const SampleFrame& frame, bool doubling_probe) {
  if (id == "axioms") return axioms_suite(L, frame);
  if (id == "lemma2") return check_lemma2(L, frame);
  if (id == "prop81") return check_prop81(L, frame);
  if (id == "remark3") return check_remark3(L, frame);
  if (id == "lemma4") return check_lemma4(L, frame);
  if (id == "prop12") return check_prop12(L, frame, doubling_probe);
  if (id == "theorem5") return check_theorem5(L, frame);
  if (id == "theorem11") return check_theorem11(L, frame);
  if (id == "theorem8") return check_theorem8(L, frame);
  if (id == "lemma9") return check_lemma9(L, frame);
  if (id == "cic-theorem") return check_cic_theorem(L, frame);
  if (id == "lemma14") return check_lemma14(L, frame);
  if (id == "theorem10") return check_theorem10(L, frame);
  if (id == "example15") return check_example15(L, frame);
  if (id == "example-numsg") return check_example_numsg(L, frame);
  if (id == "example17") return check_example17(L, frame);
  if (id == "localization-rules") return localization_rules(L, frame);
  throw ParseError("unknown suite id '" + std::string(id) + "'");
}

std::vector<Certificate> run_suite(const SuiteSpec& spec) {
  struct Job {
    std::string id;
    BackendId backend;
    std::future<Certificate> result;
  };
  std::vector<Job> jobs;
  for (const auto& id : spec.ids)
    for (const auto backend : spec.backends) {
      jobs.push_back({id, backend, std::async(std::launch::async, [id, backend, &spec] {
                        const auto start = std::chrono::steady_clock::now();
                        const Lattice& L = lattice(backend);
                        const Verdict v = run_check(id, L, spec.frame, spec.doubling_probe);
                        Certificate c;
                        c.suite = id;
                        c.backend = backend;
                        c.frame = spec.frame;
                        c.status = v.status;
                        for (const auto& w : v.witness) c.witnesses.push_back(L.print(w));
                        c.checked_count = v.checked_count;
                        c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
                        c.version = std::string(toolkit_version());
                        c.note = v.note;
                        return c;
                      })});
    }
  std::vector<Certificate> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.result.get());
  std::stable_sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) {
    return std::tie(a.suite, a.backend) < std::tie(b.suite, b.backend);
  });
  return out;
}

bool suite_failed(const std::vector<Certificate>& certs) {
  return std::any_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.status == Status::Fails; });
}

bool replay(const Certificate& cert) {
  const Lattice& L = lattice(cert.backend);
  const Verdict v = run_check(cert.suite, L, cert.frame);
  if (v.status != cert.status || v.witness.size() != cert.witnesses.size()) return false;
  for (std::size_t i = 0; i < v.witness.size(); ++i)
    if (L.parse(cert.witnesses[i]) != v.witness[i]) return false;
  return true;
}

std::string to_json(const Certificate& cert) { return cert_json(cert).dump(2); }

std::string to_json(const std::vector<Certificate>& certs) {
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(cert_json(c));
  return arr.dump(2) + "\n";
}

std::string frame_to_json(const SampleFrame& frame) { return frame_json(frame).dump(); }

} // namespace divlat
