#include "divlat/cli.hpp"

#include "divlat/divisorial.hpp"
#include "divlat/localization.hpp"
#include "divlat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace divlat::cli {
namespace {

using json = nlohmann::ordered_json;

struct Field {
  std::string name;
  std::string value;
};

struct NamedVerdict {
  std::string name;
  Status status;
  std::vector<std::string> witnesses;
  std::uint64_t checked_count;
  std::string note;
};

struct Report {
  std::string command;
  std::string backend;
  std::vector<Field> inputs;
  std::vector<Field> outputs;
  std::vector<NamedVerdict> verdicts;
  int exit_code = kOk;
};

NamedVerdict named(std::string name, const Verdict& v, const Lattice& L) {
  NamedVerdict n{std::move(name), v.status, {}, v.checked_count, v.note};
  for (const auto& w : v.witness) n.witnesses.push_back(L.print(w));
  return n;
}

std::string verdict_text(const NamedVerdict& v) {
  std::string s;
  switch (v.status) {
  case Status::HoldsOnFrame: s = "yes"; break;
  case Status::HoldsGlobally: s = "yes (global)"; break;
  case Status::Fails: s = "NO"; break;
  default: s = std::string(status_name(v.status)); break;
  }
  if (!v.witnesses.empty()) {
    s += " (witness";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) s += (i ? ", \"" : " \"") + v.witnesses[i] + "\"";
    s += ")";
  }
  if (!v.note.empty()) s += ": " + v.note;
  return s;
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["command"] = r.command;
    j["backend"] = r.backend;
    j["inputs"] = json::array();
    for (const auto& f : r.inputs) j["inputs"].push_back({{"name", f.name}, {"value", f.value}});
    j["outputs"] = json::array();
    for (const auto& f : r.outputs) j["outputs"].push_back({{"name", f.name}, {"value", f.value}});
    j["verdicts"] = json::array();
    for (const auto& v : r.verdicts)
      j["verdicts"].push_back({{"name", v.name},
                               {"status", status_name(v.status)},
                               {"witnesses", v.witnesses},
                               {"checked_count", v.checked_count},
                               {"note", v.note}});
    j["exit_code"] = r.exit_code;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& f : r.inputs) out << f.name << ": " << f.value << '\n';
  for (const auto& f : r.outputs) out << f.name << ": " << f.value << '\n';
  for (const auto& v : r.verdicts) out << v.name << ": " << verdict_text(v) << '\n';
}

struct Options {
  std::string backend = "dedekind-int";
  std::string format = "text";
  std::string element;
  std::string prime;
  std::string y;
  std::string x;
  std::string ids = "all";
  std::string backends = "all";
  std::string out_path;
  bool no_probe = false;
  SampleFrame frame;
};

void add_common(CLI::App* cmd, Options& o, bool with_backend) {
  if (with_backend)
    cmd->add_option("--backend", o.backend, "dvr-chain | dedekind-int | ratval | numsg | ex17")->required();
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-exp", o.frame.max_exp, "dvr-chain: largest exponent")->check(CLI::PositiveNumber);
  cmd->add_option("--max-int", o.frame.max_int, "dedekind-int: largest integer")->check(CLI::PositiveNumber);
  cmd->add_option("--max-num", o.frame.max_num, "ratval: largest cut numerator")->check(CLI::PositiveNumber);
  cmd->add_option("--max-den", o.frame.max_den, "ratval: largest cut denominator")->check(CLI::PositiveNumber);
  cmd->add_option("--max-frob", o.frame.max_frob, "numsg: largest Frobenius number")->check(CLI::PositiveNumber);
  cmd->add_option("--max-scale", o.frame.max_scale, "numsg: largest scale")->check(CLI::PositiveNumber);
  cmd->add_option("--max-deg", o.frame.max_deg, "ex17: largest degree")->check(CLI::PositiveNumber);
  cmd->add_option("--tuple-budget", o.frame.tuple_budget, "largest tuple count per quantified check")
      ->check(CLI::PositiveNumber);
}

Report cmd_closure(const Lattice& L, const Options& o) {
  Report r{"closure", std::string(L.name()), {{"a", o.element}}, {}, {}, kOk};
  const auto w = v_closure(L, L.parse(o.element), o.frame);
  if (w.principal) r.outputs.push_back({"x", L.print(*w.principal)});
  if (w.colon) r.outputs.push_back({"(x:a)", L.print(*w.colon)});
  r.outputs.push_back({"a_v", L.print(w.closure)});
  r.outputs.push_back({"divisorial", w.closure == w.input ? "true" : "false"});
  return r;
}

Report cmd_residual(const Lattice& L, const Options& o) {
  Report r{"residual", std::string(L.name()), {{"y", o.y}, {"x", o.x}}, {}, {}, kOk};
  r.outputs.push_back({"(y:x)", L.print(L.residual(L.parse(o.y), L.parse(o.x)))});
  return r;
}

Report cmd_aofp(const Lattice& L, const Options& o) {
  Report r{"aofp", std::string(L.name()), {{"a", o.element}, {"p", o.prime}}, {}, {}, kOk};
  const Element p = L.parse(o.prime);
  const Element result = a_of_p(L, L.parse(o.element), p, o.frame);
  r.outputs.push_back({"a(p)", L.print(result)});
  r.outputs.push_back({"below p", L.leq(result, p) ? "true" : "false"});
  return r;
}

Report cmd_localize(const Lattice& L, const Options& o) {
  Report r{"localize", std::string(L.name()), {{"x", o.element}, {"p", o.prime}}, {}, {}, kOk};
  const auto loc = localize(L, L.parse(o.element), L.parse(o.prime));
  r.outputs.push_back({"x_p", L.print(loc.value)});
  return r;
}

Report cmd_generate(const Lattice& L, const Options& o) {
  Report r{"generate", std::string(L.name()), {{"frame", frame_to_json(o.frame)}}, {}, {}, kOk};
  for (const auto& e : L.enumerate(o.frame)) r.outputs.push_back({"element", L.print(e)});
  return r;
}

Report cmd_analyze(const Lattice& L, const Options& o) {
  Report r{"analyze", std::string(L.name()), {{"frame", frame_to_json(o.frame)}}, {}, {}, kOk};
  const auto c = classify(L, o.frame);
  r.verdicts.push_back(named("lattice domain", c.lattice_domain, L));
  r.verdicts.push_back(named("valuation", c.valuation, L));
  r.verdicts.push_back(named("divisorial", c.divisorial, L));
  r.verdicts.push_back(named("h-local", c.h_local, L));
  r.verdicts.push_back(named("prufer", c.prufer, L));
  r.verdicts.push_back(named("integrally closed", c.integrally_closed, L));
  r.verdicts.push_back(named("completely integrally closed", c.completely_integrally_closed, L));
  r.verdicts.push_back(named("dedekind", c.dedekind, L));
  const auto implications = check_classification(c);
  r.verdicts.push_back(named("implications", implications, L));
  if (implications.failed()) r.exit_code = kCounterexample;
  return r;
}

Report cmd_suite(const Options& o) {
  SuiteSpec spec{parse_suite_ids(o.ids), parse_backends(o.backends), o.frame, !o.no_probe};
  Report r{"suite", o.backends, {{"ids", o.ids}, {"frame", frame_to_json(o.frame)}}, {}, {}, kOk};
  const auto certs = run_suite(spec);
  bool insufficient = false;
  for (const auto& c : certs) {
    r.verdicts.push_back({c.suite + "/" + std::string(backend_name(c.backend)), c.status, c.witnesses,
                          c.checked_count, c.note});
    insufficient = insufficient || c.status == Status::FrameInsufficient;
  }
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw Error("cannot write " + o.out_path);
    file << to_json(certs);
    r.outputs.push_back({"certificates", o.out_path});
  }
  if (suite_failed(certs))
    r.exit_code = kCounterexample;
  else if (insufficient)
    r.exit_code = kFrameInsufficient;
  return r;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisorial closure, localization and classification of multiplicative lattices", "divlat"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "classify a backend on its frame");
  add_common(analyze, o, true);
  auto* closure = app.add_subcommand("closure", "divisorial closure a_v = (x:(x:a))");
  add_common(closure, o, true);
  closure->add_option("--element", o.element, "element literal")->required();
  auto* residual = app.add_subcommand("residual", "residual (y:x)");
  add_common(residual, o, true);
  residual->add_option("--y", o.y, "element literal")->required();
  residual->add_option("--x", o.x, "element literal")->required();
  auto* aofp = app.add_subcommand("aofp", "smallest a(p) >= a not below the maximal p");
  add_common(aofp, o, true);
  aofp->add_option("--element", o.element, "element literal")->required();
  aofp->add_option("--prime", o.prime, "maximal element literal")->required();
  auto* loc = app.add_subcommand("localize", "localization x_p");
  add_common(loc, o, true);
  loc->add_option("--element", o.element, "element literal")->required();
  loc->add_option("--prime", o.prime, "prime element literal")->required();
  auto* suite = app.add_subcommand("suite", "run statement checks and emit certificates");
  add_common(suite, o, false);
  suite->add_option("--ids", o.ids, "comma-separated suite ids, or all");
  suite->add_option("--backends", o.backends, "comma-separated backend names, or all");
  suite->add_option("--out", o.out_path, "write certificates (JSON) to this path");
  suite->add_flag("--no-probe", o.no_probe, "skip doubling probes");
  auto* generate = app.add_subcommand("generate", "print the frame enumeration");
  add_common(generate, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Report r;
    if (suite->parsed()) {
      r = cmd_suite(o);
    } else {
      const Lattice& L = lattice(backend_from_name(o.backend));
      if (analyze->parsed()) r = cmd_analyze(L, o);
      if (closure->parsed()) r = cmd_closure(L, o);
      if (residual->parsed()) r = cmd_residual(L, o);
      if (aofp->parsed()) r = cmd_aofp(L, o);
      if (loc->parsed()) r = cmd_localize(L, o);
      if (generate->parsed()) r = cmd_generate(L, o);
    }
    emit(r, o.format, out);
    return r.exit_code;
  } catch (const FrameInsufficient& e) {
    err << "frame insufficient: " << e.what() << '\n';
    return kFrameInsufficient;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace divlat::cli
