// bisimkit command-line tool
//
// Exit status: 0 when the verdict holds (equivalent, no MD found, suite
// passed), 1 when it does not, 2 on usage or parse errors.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisimkit/ccs_lts.hpp"
#include "bisimkit/ccs_plus.hpp"
#include "bisimkit/erasure.hpp"
#include "bisimkit/md_analysis.hpp"
#include "bisimkit/normalizer.hpp"
#include "bisimkit/pi_bisim.hpp"
#include "bisimkit/serialize.hpp"
#include "bisimkit/suites.hpp"
#include "bisimkit/syntax.hpp"

using namespace bisimkit;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::vector<std::string> command;
  std::vector<std::string> inputs;
  Json verdict;
  Json payload = Json::object();
  std::vector<std::string> lines;  // text rendering
  int exit_code = 0;
};

std::string g_format = "text";

int emit(RunReport& r, std::chrono::steady_clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (g_format == "json") {
    Json doc{{"command", r.command}, {"inputs", r.inputs}, {"verdict", r.verdict},
             {"payload", r.payload}, {"timing_ms", ms},    {"version", kVersion}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
  return r.exit_code;
}

enum class Calc { Ccs, CcsPlus, Pi };

Calc calculus_of(const std::string& s) {
  if (s == "ccs") return Calc::Ccs;
  if (s == "ccs+") return Calc::CcsPlus;
  if (s == "pi") return Calc::Pi;
  throw UsageError("unknown calculus \"" + s + "\" (ccs, ccs+, pi)");
}

Term parse_for(Calc c, const std::string& text) { return c == Calc::Ccs ? parse_ccs(text) : parse_ccs_plus(text); }

std::vector<Name> name_list(const std::string& csv) {
  std::vector<Name> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(Name::intern(item));
  if (out.empty()) throw UsageError("empty name list");
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- subcommands --------------------------------------------------------

RunReport cmd_normalize(const std::string& text, const std::string& calculus) {
  if (calculus_of(calculus) != Calc::Ccs) throw UsageError("normalize is defined on microCCS only");
  RunReport r;
  const Term t = parse_ccs(text);
  const auto nf = normalize(t);
  r.inputs = {print_term(t)};
  r.verdict = print_term(nf.term);
  r.payload = {{"normal_form", print_term(nf.term)}, {"steps", nf.steps}, {"term", to_json(nf.term)}};
  r.lines = {print_term(nf.term), "steps: " + std::to_string(nf.steps)};
  return r;
}

struct BisimFlags {
  std::string calculus = "ccs";
  std::string method;
  std::string style = "strong";
  bool depth = false;
};

RunReport cmd_bisim(const std::string& p_text, const std::string& q_text, BisimFlags f) {
  const Calc calc = calculus_of(f.calculus);
  const bool pi_style = f.style == "ground" || f.style == "late" || f.style == "early";
  if (!pi_style && f.style != "strong" && f.style != "distributed")
    throw UsageError("unknown style \"" + f.style + "\" (strong, distributed, ground, late, early)");
  if (calc == Calc::Pi && f.style == "strong") f.style = "ground";
  if ((calc == Calc::Pi) != (f.style == "ground" || f.style == "late" || f.style == "early"))
    throw UsageError("style " + f.style + " does not apply to calculus " + f.calculus);
  const bool ccs_strong = calc == Calc::Ccs && f.style == "strong";
  if (f.method.empty()) f.method = ccs_strong ? "both" : "oracle";
  if (f.method != "norm" && f.method != "oracle" && f.method != "both")
    throw UsageError("unknown method \"" + f.method + "\" (norm, oracle, both)");
  if (f.method != "oracle" && !ccs_strong) throw UsageError("method " + f.method + " needs --calculus ccs --style strong");
  if (f.depth && calc == Calc::Pi) throw UsageError("--depth applies to CCS terms only");

  RunReport r;
  r.payload["style"] = f.style;
  r.payload["method"] = f.method;
  bool verdict = false;
  std::string p_shown, q_shown;

  if (calc == Calc::Pi) {
    const PiTerm p = parse_pi(p_text), q = parse_pi(q_text);
    p_shown = print_term(p);
    q_shown = print_term(q);
    const PiStyle style = f.style == "ground" ? PiStyle::Ground : f.style == "late" ? PiStyle::Late : PiStyle::Early;
    verdict = pi_bisimilar(p, q, style);
  } else {
    const Term p = parse_for(calc, p_text), q = parse_for(calc, q_text);
    p_shown = print_term(p);
    q_shown = print_term(q);
    if (f.style == "distributed") {
      verdict = dsim(p, q);
    } else if (calc == Calc::CcsPlus) {
      verdict = strong_bisim_plus(p, q);
    } else {
      std::optional<bool> by_norm, by_oracle;
      if (f.method != "oracle") {
        const auto np = normalize(p), nq = normalize(q);
        by_norm = np.term == nq.term;
        r.payload["normal_forms"] = {print_term(np.term), print_term(nq.term)};
      }
      if (f.method != "norm") by_oracle = bisimilar_oracle(p, q);
      if (by_norm && by_oracle && *by_norm != *by_oracle) {
        std::cerr << "error: normal forms say " << yes_no(*by_norm) << " but the oracle says " << yes_no(*by_oracle)
                  << "\n";
        r.payload["divergence"] = true;
        r.verdict = nullptr;
        r.exit_code = 2;
        r.inputs = {p_shown, q_shown};
        r.lines = {"divergence between methods"};
        return r;
      }
      verdict = by_norm ? *by_norm : *by_oracle;
    }
    if (f.depth && !verdict) {
      if (auto d = distinguishing_depth(p, q)) {
        r.payload["distinguishing_depth"] = *d;
      }
    }
  }
  r.inputs = {p_shown, q_shown};
  r.verdict = verdict;
  r.exit_code = verdict ? 0 : 1;
  r.lines = {std::string(verdict ? "equivalent" : "not equivalent") + " (" + f.style + ", " + f.method + ")"};
  if (r.payload.contains("normal_forms"))
    r.lines.push_back("normal forms: " + r.payload["normal_forms"][0].get<std::string>() + "  /  " +
                      r.payload["normal_forms"][1].get<std::string>());
  if (r.payload.contains("distinguishing_depth"))
    r.lines.push_back("distinguishing depth: " + std::to_string(r.payload["distinguishing_depth"].get<std::size_t>()));
  return r;
}

RunReport cmd_prime(const std::string& text) {
  RunReport r;
  const Term t = parse_ccs(text);
  const auto d = prime_decompose(t);
  r.inputs = {print_term(t)};
  Json comps = Json::array();
  std::string shown;
  for (const auto& c : d.components) {
    comps.push_back(print_term(c));
    shown += (shown.empty() ? "" : ", ") + print_term(c);
  }
  r.verdict = comps;
  r.payload = {{"components", comps}, {"prime", d.components.size() == 1}};
  r.lines = {"{" + shown + "}"};
  return r;
}

RunReport cmd_erase(const std::string& text, const std::string& a, const std::string& b) {
  if (a == b) throw UsageError("erasure names must be distinct");
  RunReport r;
  const PiTerm p = parse_pi(text);
  const ErasureContext ctx(Name::intern(a), Name::intern(b));
  const Term e = erase(p, ctx);
  r.inputs = {print_term(p), a, b};
  r.verdict = print_term(e);
  r.payload = {{"erasure", print_term(e)}, {"term", to_json(e)}};
  r.lines = {print_term(e)};
  return r;
}

RunReport cmd_md_search(const std::string& calculus, const std::string& shape, std::uint32_t size,
                        const std::string& names) {
  const Calc calc = calculus_of(calculus);
  if (calc == Calc::Pi) throw UsageError("md-search covers ccs and ccs+");
  if (shape != "parallel" && shape != "diagram") throw UsageError("unknown shape \"" + shape + "\" (parallel, diagram)");
  if (shape == "parallel" && calc != Calc::Ccs) throw UsageError("the parallel shape is searched in microCCS only");
  const auto alphabet = name_list(names);
  RunReport r;
  r.inputs = {calculus, shape, std::to_string(size), names};
  if (shape == "parallel") {
    ParallelSearchStats stats;
    auto w = search_md_parallel_shape(size, alphabet, &stats);
    r.payload["candidates"] = stats.candidates;
    if (w) {
      r.verdict = {{"left", print_term(w->left())}, {"right", print_term(w->right())}};
      r.lines = {"witness: " + print_term(w->left()) + "  ~  " + print_term(w->right())};
    }
  } else {
    auto w = search_md_diagram(calc == Calc::Ccs ? Calculus::Ccs : Calculus::CcsPlus, size, alphabet);
    if (w) {
      r.verdict = {{"q", print_term(w->q)},
                   {"eta1", w->eta1.str()},
                   {"eta2", w->eta2.str()},
                   {"q12", print_term(w->q12)},
                   {"q21", print_term(w->q21)}};
      r.lines = {"witness: q = " + print_term(w->q) + ", " + w->eta1.str() + " then " + w->eta2.str() + " -> " +
                 print_term(w->q12) + ", " + w->eta2.str() + " then " + w->eta1.str() + " -> " + print_term(w->q21)};
    }
  }
  if (r.verdict.is_null()) {
    r.verdict = "none";
    r.lines = {"none"};
  } else {
    r.exit_code = 1;
  }
  return r;
}

RunReport cmd_enumerate(const std::string& which, SuiteOptions opts) {
  std::vector<const SuiteEntry*> chosen;
  if (which == "all") {
    for (const auto& s : suites()) chosen.push_back(&s);
  } else if (const auto* s = find_suite(which)) {
    chosen.push_back(s);
  } else {
    std::string known;
    for (const auto& s : suites()) known += std::string(known.empty() ? "" : ", ") + s.name;
    throw UsageError("unknown suite \"" + which + "\"; suites: " + known + ", all");
  }
  RunReport r;
  r.inputs = {which};
  Json reports = Json::array();
  bool ok = true;
  for (const auto* s : chosen) {
    const SuiteReport rep = run_suite(*s, opts);
    ok = ok && rep.passed();
    reports.push_back({{"id", rep.id},
                       {"suite", rep.name},
                       {"passed", rep.passed()},
                       {"checked", rep.checked},
                       {"failures", rep.failures},
                       {"counterexample", rep.counterexample.empty() ? Json(nullptr) : Json(rep.counterexample)},
                       {"notes", rep.notes}});
    r.lines.push_back(std::string(rep.passed() ? "pass" : "FAIL") + " " + rep.name + ": checked " +
                      std::to_string(rep.checked) + ", failures " + std::to_string(rep.failures));
    for (const auto& n : rep.notes) r.lines.push_back("  " + n);
    if (!rep.counterexample.empty()) r.lines.push_back("  first counterexample: " + rep.counterexample);
  }
  r.verdict = ok;
  r.payload = {{"suites", reports}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bisimilarity toolkit for microCCS, microCCS+ and the finite pi-calculus"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--format", g_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string t1, t2, calculus = "ccs";
  BisimFlags bf;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form and rewrite-step count of a microCCS term");
  normalize_cmd->add_option("term", t1)->required();
  normalize_cmd->add_option("--calculus", calculus);

  auto add_bisim_flags = [&](CLI::App* sub, bool with_style) {
    sub->add_option("p", t1)->required();
    sub->add_option("q", t2)->required();
    sub->add_option("--calculus", bf.calculus, "ccs, ccs+ or pi");
    if (with_style) sub->add_option("--style", bf.style, "strong, distributed, ground, late or early");
    sub->add_option("--method", bf.method, "norm, oracle or both");
    sub->add_flag("--depth", bf.depth, "Report the distinguishing depth of inequivalent CCS terms");
  };
  auto* bisim_cmd = app.add_subcommand("bisim", "Decide an equivalence between two terms");
  add_bisim_flags(bisim_cmd, true);
  auto* dsim_cmd = app.add_subcommand("dsim", "Distributed bisimilarity (bisim --style distributed)");
  add_bisim_flags(dsim_cmd, false);

  auto* prime_cmd = app.add_subcommand("prime", "Prime decomposition of a microCCS term");
  prime_cmd->add_option("term", t1)->required();

  std::string a, b;
  auto* erase_cmd = app.add_subcommand("erase", "Erase a pi term to microCCS relative to names a, b");
  erase_cmd->add_option("term", t1)->required();
  erase_cmd->add_option("a", a)->required();
  erase_cmd->add_option("b", b)->required();

  std::string shape = "parallel", names = "a,b";
  std::uint32_t md_size = 3;
  auto* md_cmd = app.add_subcommand("md-search", "Search for a mirrored dependency");
  md_cmd->add_option("--calculus", calculus);
  md_cmd->add_option("--shape", shape, "parallel or diagram");
  md_cmd->add_option("--size", md_size, "Component size bound (parallel) or term size bound (diagram)");
  md_cmd->add_option("--names", names, "Comma-separated channel names");

  std::string suite;
  SuiteOptions opts;
  auto* enum_cmd = app.add_subcommand("enumerate", "Run a named property suite (or all)");
  enum_cmd->add_option("suite", suite)->required();
  enum_cmd->add_option("--ccs-size", opts.ccs_size, "Term size bound for CCS suites");
  enum_cmd->add_option("--cancel-size", opts.cancel_size, "Size bound on p | r for the cancellation suite");
  enum_cmd->add_option("--plus-size", opts.plus_size, "Term size bound for microCCS+ suites");
  enum_cmd->add_option("--pi-size", opts.pi_size, "Prefix bound for the pi enumeration");
  enum_cmd->add_option("--samples", opts.samples, "Sample count for randomized suites");
  enum_cmd->add_option("--seed", opts.seed, "Seed for randomized suites");
  enum_cmd->add_option("--workers", opts.workers, "Worker threads (default: BISIMKIT_WORKERS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (*normalize_cmd) report = cmd_normalize(t1, calculus);
    else if (*bisim_cmd) report = cmd_bisim(t1, t2, bf);
    else if (*dsim_cmd) {
      if (bf.calculus == "ccs") bf.calculus = "ccs+";
      bf.style = "distributed";
      report = cmd_bisim(t1, t2, bf);
    } else if (*prime_cmd) report = cmd_prime(t1);
    else if (*erase_cmd) report = cmd_erase(t1, a, b);
    else if (*md_cmd) report = cmd_md_search(calculus, shape, md_size, names);
    else report = cmd_enumerate(suite, opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  report.command.assign(argv, argv + argc);
  return emit(report, start);
}
