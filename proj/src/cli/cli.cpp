#include "cli/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli/io.hpp"
#include "exactrn/cauchy_schwarz.hpp"
#include "exactrn/continuity.hpp"
#include "exactrn/errors.hpp"
#include "exactrn/expr.hpp"
#include "exactrn/hyper.hpp"
#include "exactrn/laws.hpp"
#include "exactrn/random.hpp"
#include "exactrn/rat.hpp"
#include "exactrn/vec.hpp"

namespace exactrn::cli {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::uint64_t seed = 1;
  std::size_t cases = 0;  // 0 = per-command default, see run()
  std::size_t dim_lo = 0;
  std::size_t dim_hi = 8;
  std::int64_t magnitude = 100;
  std::vector<int> orders = {1, 2};
  std::string format = "text";
  std::string out;
  std::string input;
  bool detail = false;
};

// failed counts checks that evaluated false; faults the subset that can
// only come from bugs; violations the subset that refutes a user
// expression. Exit code: faults > input errors > violations > pass.
struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::size_t input_errors = 0;
  std::size_t faults = 0;
  std::size_t violations = 0;
};

int exit_code(const Tally& t) {
  if (t.faults) return kExitFault;
  if (t.input_errors) return kExitInputError;
  if (t.violations) return kExitViolation;
  return kExitPass;
}

const char* verdict(const Tally& t) { return t.failed == 0 ? "pass" : "fail"; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

long long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

ordered_json vec_json(const RatVec& v) {
  ordered_json arr = ordered_json::array();
  for (const Rat& r : v.entries()) arr.push_back(r.str());
  return arr;
}

ordered_json hyper_json(const Hyper& h) {
  ordered_json arr = ordered_json::array();
  for (const auto& [exponent, coeff] : h.terms()) {
    arr.push_back(ordered_json::array({exponent, coeff.str()}));
  }
  return arr;
}

ordered_json value_json(const std::variant<Rat, RatVec>& value) {
  if (std::holds_alternative<Rat>(value)) {
    return std::get<Rat>(value).str();
  }
  return vec_json(std::get<RatVec>(value));
}

ordered_json certificate_json(const CsCertificate& cert) {
  ordered_json j;
  j["kind"] = cert.kind_name();
  if (cert.kind() == CsCertificate::Kind::Dependent) {
    j["witness"] = cert.witness().str();
  }
  if (cert.kind() == CsCertificate::Kind::Strict) {
    j["gap"] = cert.gap().str();
  }
  return j;
}

ordered_json replay_json(const ReplayReport& rep) {
  ordered_json j;
  j["zero_v_branch"] = rep.zero_v_branch;
  if (rep.witness) j["witness"] = rep.witness->str();
  ordered_json steps = ordered_json::array();
  for (const ReplayStep& s : rep.steps) {
    ordered_json step;
    step["name"] = s.name;
    step["lhs"] = value_json(s.lhs);
    step["relation"] = relation_symbol(s.relation);
    step["rhs"] = value_json(s.rhs);
    step["holds"] = s.holds;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["all_hold"] = rep.all_hold();
  return j;
}

int emit(const ordered_json& structured, const std::string& text,
         const Options& opt, int code) {
  const std::string payload =
      opt.format == "structured" ? structured.dump(2) + "\n" : text;
  if (!opt.out.empty()) {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
      std::cerr << "input error: cannot write " << opt.out << "\n";
      return kExitInputError;
    }
    out << payload;
  } else {
    std::cout << payload;
  }
  return code;
}

int cmd_axioms(const Options& opt) {
  auto t0 = Clock::now();
  Tally tally;

  ordered_json report;
  report["tool"] = "exactrn";
  report["command"] = "axioms";
  ordered_json config;
  config["seed"] = opt.seed;
  config["cases"] = opt.cases;
  config["dims"] = ordered_json::array({opt.dim_lo, opt.dim_hi});
  config["magnitude"] = opt.magnitude;
  report["config"] = std::move(config);

  std::ostringstream text;
  text << "exactrn axioms\n"
       << "seed " << opt.seed << "  cases " << opt.cases << "  dims "
       << opt.dim_lo << ".." << opt.dim_hi << "  magnitude " << opt.magnitude
       << "\n";

  ordered_json fields = ordered_json::array();
  std::uint64_t label = 0;
  auto run_field = [&](auto tag, const char* fname) {
    using S = decltype(tag);
    (void)tag;
    ordered_json field;
    field["field"] = fname;
    ordered_json laws_json = ordered_json::array();
    text << "\n" << fname << " field:\n";
    for (const Law& law : vector_space_laws<S>()) {
      LawResult res = run_law(law, Rng(opt.seed).fork(label++), opt.cases,
                              opt.dim_lo, opt.dim_hi, opt.magnitude);
      tally.checks += res.cases;
      tally.failed += res.failures;
      tally.faults += res.failures;
      ordered_json lj;
      lj["name"] = res.name;
      lj["cases"] = res.cases;
      lj["failures"] = res.failures;
      laws_json.push_back(std::move(lj));
      text << "  " << pad(res.name, 34) << res.cases << " cases  "
           << res.failures << " failures\n";
    }
    field["laws"] = std::move(laws_json);
    fields.push_back(std::move(field));
  };
  run_field(Rat(0), "rational");
  run_field(Hyper(), "hyperreal");

  report["fields"] = std::move(fields);
  report["checks"] = tally.checks;
  report["failed"] = tally.failed;
  report["verdict"] = verdict(tally);

  text << "\nchecks " << tally.checks << "  failed " << tally.failed << "\n"
       << "verdict: " << verdict(tally) << "\n"
       << "elapsed_ms " << elapsed_ms(t0) << "\n";
  return emit(report, text.str(), opt, exit_code(tally));
}

int cmd_cs(const Options& opt, const char* command_name, bool detail) {
  auto t0 = Clock::now();
  std::vector<VecPair> pairs = load_pairs(opt.input);
  Tally tally;

  ordered_json report;
  report["tool"] = "exactrn";
  report["command"] = command_name;
  report["input"] = opt.input;
  report["detail"] = detail;

  std::ostringstream text;
  text << "exactrn " << command_name << "\ninput " << opt.input << "\n";

  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const VecPair& p = pairs[i];
    ordered_json entry;
    entry["index"] = i + 1;
    entry["u"] = vec_json(p.u);
    entry["v"] = vec_json(p.v);
    text << "\npair " << (i + 1) << "  u=" << p.u.str() << "  v=" << p.v.str()
         << "\n";
    try {
      CsCertificate cert = classify(p.u, p.v);
      bool ok = verify_certificate(p.u, p.v, cert);
      bool cs2 = cs2_holds(p.u, p.v);
      ReplayReport rep = replay_proof(p.u, p.v);
      std::size_t failed_steps = 0;
      for (const ReplayStep& s : rep.steps) {
        if (!s.holds) ++failed_steps;
      }
      tally.checks += 2 + rep.steps.size();
      std::size_t bad = (ok ? 0u : 1u) + (cs2 ? 0u : 1u) + failed_steps;
      tally.failed += bad;
      tally.faults += bad;

      entry["certificate"] = certificate_json(cert);
      entry["verified"] = ok;
      entry["cs2_holds"] = cs2;
      entry["replay_all_hold"] = rep.all_hold();
      if (detail) entry["replay"] = replay_json(rep);

      text << "  certificate " << cert.kind_name();
      if (cert.kind() == CsCertificate::Kind::Dependent) {
        text << "  witness " << cert.witness().str();
      }
      if (cert.kind() == CsCertificate::Kind::Strict) {
        text << "  gap " << cert.gap().str();
      }
      text << "\n  verified " << bool_str(ok) << "  cs2 " << bool_str(cs2)
           << "  replay " << (rep.all_hold() ? "all-hold" : "FAILED") << " ("
           << rep.steps.size() << " steps)\n";
      if (detail) {
        if (rep.witness) text << "    witness " << rep.witness->str() << "\n";
        for (const ReplayStep& s : rep.steps) {
          text << "    " << s.name << ": " << replay_value_str(s.lhs) << " "
               << relation_symbol(s.relation) << " "
               << replay_value_str(s.rhs) << (s.holds ? "" : "  VIOLATED")
               << "\n";
        }
      }
    } catch (const DimensionError& e) {
      ++tally.input_errors;
      entry["error"] = e.what();
      text << "  error: " << e.what() << "\n";
    } catch (const LogicFault& e) {
      ++tally.faults;
      ++tally.failed;
      entry["error"] = std::string("internal fault: ") + e.what();
      text << "  internal fault: " << e.what() << "\n";
    }
    entries.push_back(std::move(entry));
  }

  report["pairs"] = std::move(entries);
  report["pairs_total"] = pairs.size();
  report["checks"] = tally.checks;
  report["failed"] = tally.failed;
  report["input_errors"] = tally.input_errors;
  report["verdict"] = verdict(tally);

  text << "\npairs " << pairs.size() << "  checks " << tally.checks
       << "  failed " << tally.failed << "  input_errors "
       << tally.input_errors << "\n"
       << "verdict: " << verdict(tally) << "\n"
       << "elapsed_ms " << elapsed_ms(t0) << "\n";
  return emit(report, text.str(), opt, exit_code(tally));
}

int cmd_metric(const Options& opt) {
  auto t0 = Clock::now();
  std::vector<VecTriple> triples = load_triples(opt.input);
  Tally tally;

  ordered_json report;
  report["tool"] = "exactrn";
  report["command"] = "metric";
  report["input"] = opt.input;

  std::ostringstream text;
  text << "exactrn metric\ninput " << opt.input << "\n";

  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const VecTriple& t = triples[i];
    ordered_json entry;
    entry["index"] = i + 1;
    entry["x"] = vec_json(t.x);
    entry["y"] = vec_json(t.y);
    entry["z"] = vec_json(t.z);
    text << "\ntriple " << (i + 1) << "  x=" << t.x.str() << "  y=" << t.y.str()
         << "  z=" << t.z.str() << "\n";
    try {
      MetricAxiomsReport axioms = metric_axioms_report(t.x, t.y, t.z);
      tally.checks += 3;
      std::size_t bad = (axioms.commutative ? 0u : 1u) +
                        (axioms.positive_definite ? 0u : 1u) +
                        (axioms.triangle ? 0u : 1u);
      tally.failed += bad;
      tally.faults += bad;
      entry["commutative"] = axioms.commutative;
      entry["positive_definite"] = axioms.positive_definite;
      entry["triangle"] = axioms.triangle;
      entry["triangle_is_equality"] = axioms.triangle_is_equality;
      text << "  commutative " << bool_str(axioms.commutative)
           << "  positive_definite " << bool_str(axioms.positive_definite)
           << "  triangle " << bool_str(axioms.triangle)
           << "  triangle_equality " << bool_str(axioms.triangle_is_equality)
           << "\n";
    } catch (const DimensionError& e) {
      ++tally.input_errors;
      entry["error"] = e.what();
      text << "  error: " << e.what() << "\n";
    } catch (const LogicFault& e) {
      ++tally.faults;
      ++tally.failed;
      entry["error"] = std::string("internal fault: ") + e.what();
      text << "  internal fault: " << e.what() << "\n";
    }
    entries.push_back(std::move(entry));
  }

  report["triples"] = std::move(entries);
  report["triples_total"] = triples.size();
  report["checks"] = tally.checks;
  report["failed"] = tally.failed;
  report["input_errors"] = tally.input_errors;
  report["verdict"] = verdict(tally);

  text << "\ntriples " << triples.size() << "  checks " << tally.checks
       << "  failed " << tally.failed << "  input_errors "
       << tally.input_errors << "\n"
       << "verdict: " << verdict(tally) << "\n"
       << "elapsed_ms " << elapsed_ms(t0) << "\n";
  return emit(report, text.str(), opt, exit_code(tally));
}

int cmd_continuity(const Options& opt) {
  auto t0 = Clock::now();
  ContinuityInput input = load_continuity(opt.input);
  Tally tally;

  ordered_json report;
  report["tool"] = "exactrn";
  report["command"] = "continuity";
  report["input"] = opt.input;
  report["expression"] = input.expr_text;
  report["arity"] = input.expr.arity;
  report["contains_sgn"] = input.expr.contains_sgn();

  std::vector<ProbeSpec> probes = input.probes;
  std::size_t generated = 0;
  if (probes.empty()) {
    if (input.expr.arity == 0) {
      std::cerr << "input error: cannot generate probes for a zero-arity "
                   "expression\n";
      return kExitInputError;
    }
    Rng rng(opt.seed);
    for (int k : opt.orders) {
      for (std::size_t i = 0; i < opt.cases; ++i) {
        Vec<Rat> x = random_rat_vec(rng, input.expr.arity, opt.magnitude);
        Vec<Rat> h = random_rat_vec(rng, input.expr.arity, opt.magnitude);
        while (zvecp(h)) {
          h = random_rat_vec(rng, input.expr.arity, opt.magnitude);
        }
        probes.push_back(ProbeSpec{std::move(x), std::move(h), k});
      }
    }
    generated = probes.size();
  }

  ordered_json config;
  config["seed"] = opt.seed;
  config["cases"] = opt.cases;
  config["magnitude"] = opt.magnitude;
  config["orders"] = opt.orders;
  report["config"] = std::move(config);
  report["generated"] = generated;

  std::ostringstream text;
  text << "exactrn continuity\ninput " << opt.input << "\n"
       << "expression " << input.expr_text << "  arity " << input.expr.arity
       << "  contains_sgn " << bool_str(input.expr.contains_sgn()) << "\n"
       << "seed " << opt.seed << "  generated " << generated << "\n";

  ordered_json probe_entries = ordered_json::array();
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const ProbeSpec& spec = probes[i];
    ordered_json entry;
    entry["index"] = i + 1;
    entry["x"] = vec_json(spec.x);
    entry["h"] = vec_json(spec.h);
    entry["k"] = spec.order;
    text << "probe " << (i + 1) << "  x=" << spec.x.str()
         << "  h=" << spec.h.str() << "  k=" << spec.order;
    try {
      ProbeResult r = probe(input.expr, spec.x, spec.h, spec.order);
      ++tally.checks;
      entry["diff"] = hyper_json(r.diff);
      entry["metric_sq_small"] = r.metric_sq_small;
      entry["diff_small"] = r.diff_small;
      entry["inputs_limited"] = r.inputs_limited;
      entry["violation"] = r.violation();
      if (r.violation()) {
        ++tally.failed;
        if (input.expr.contains_sgn()) {
          ++tally.violations;
        } else {
          ++tally.faults;
        }
      }
      text << "  diff=" << r.diff.str() << "  metric_sq_small "
           << bool_str(r.metric_sq_small) << "  diff_small "
           << bool_str(r.diff_small)
           << (r.violation() ? "  VIOLATION" : "  ok") << "\n";
    } catch (const DimensionError& e) {
      ++tally.input_errors;
      entry["error"] = e.what();
      text << "  error: " << e.what() << "\n";
    } catch (const DomainError& e) {
      ++tally.input_errors;
      entry["error"] = e.what();
      text << "  error: " << e.what() << "\n";
    }
    probe_entries.push_back(std::move(entry));
  }

  report["probes"] = std::move(probe_entries);
  report["probes_total"] = probes.size();
  report["violations"] = tally.violations;
  report["faults"] = tally.faults;
  report["input_errors"] = tally.input_errors;
  report["checks"] = tally.checks;
  report["failed"] = tally.failed;
  report["verdict"] = verdict(tally);

  text << "\nprobes " << probes.size() << "  violations " << tally.violations
       << "  faults " << tally.faults << "  input_errors "
       << tally.input_errors << "\n"
       << "verdict: " << verdict(tally) << "\n"
       << "elapsed_ms " << elapsed_ms(t0) << "\n";
  return emit(report, text.str(), opt, exit_code(tally));
}

void parse_dims(const std::string& text, std::size_t& lo, std::size_t& hi) {
  auto sep = text.find("..");
  if (sep == std::string::npos) {
    throw ParseError("--dims expects LO..HI", 0);
  }
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, sep);
    const std::string hi_text = text.substr(sep + 2);
    lo = std::stoull(lo_text, &used_lo);
    hi = std::stoull(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw ParseError("--dims expects LO..HI with nonnegative integers", 0);
  }
  if (lo > hi) throw ParseError("--dims range is empty", 0);
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> orders;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      int k = std::stoi(token, &used);
      if (used != token.size() || k < 1) throw std::invalid_argument("order");
      orders.push_back(k);
    } catch (const std::exception&) {
      throw ParseError("--orders expects comma-separated integers >= 1", 0);
    }
  }
  if (orders.empty()) {
    throw ParseError("--orders expects at least one order", 0);
  }
  return orders;
}

}  // namespace

int run(int argc, const char* const* argv) {
  Options opt;
  std::string dims_text;
  std::string orders_text;

  CLI::App app{
      "exact verification kernel for R^n: vector space laws, Cauchy-Schwarz "
      "certificates, metric axioms, infinitesimal continuity probes"};
  app.require_subcommand(1);

  CLI::App* ax = app.add_subcommand(
      "axioms", "run the vector space and inner product law batteries");
  ax->add_option("--seed", opt.seed, "rng seed");
  ax->add_option("--cases", opt.cases, "cases per law (default 1000)")
      ->check(CLI::PositiveNumber);
  ax->add_option("--dims", dims_text, "dimension range LO..HI (default 0..8)");
  ax->add_option("--magnitude", opt.magnitude,
                 "bound on generated numerators and denominators")
      ->check(CLI::PositiveNumber);

  CLI::App* cs = app.add_subcommand(
      "cs", "classify vector pairs, verify certificates, replay the proof");
  cs->add_option("input", opt.input, "pair file")->required();
  cs->add_flag("--detail", opt.detail, "include per-step replay values");

  CLI::App* replay = app.add_subcommand(
      "replay", "cs with per-step replay detail forced on");
  replay->add_option("input", opt.input, "pair file")->required();

  CLI::App* metric = app.add_subcommand(
      "metric", "check the metric axioms on vector triples");
  metric->add_option("input", opt.input, "triple file")->required();

  CLI::App* cont = app.add_subcommand(
      "continuity",
      "probe an expression for continuity violations at infinitesimal "
      "displacements");
  cont->add_option("input", opt.input, "expression + probe file")->required();
  cont->add_option("--seed", opt.seed, "rng seed for generated probes");
  cont->add_option("--cases", opt.cases,
                   "generated probes per order when the file has none "
                   "(default 100)")
      ->check(CLI::PositiveNumber);
  cont->add_option("--magnitude", opt.magnitude,
                   "bound on generated numerators and denominators")
      ->check(CLI::PositiveNumber);
  cont->add_option("--orders", orders_text,
                   "comma-separated displacement orders (default 1,2)");

  for (CLI::App* sub : {ax, cs, replay, metric, cont}) {
    sub->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", opt.out, "write the report to PATH");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (!dims_text.empty()) parse_dims(dims_text, opt.dim_lo, opt.dim_hi);
    if (!orders_text.empty()) opt.orders = parse_orders(orders_text);
    if (opt.cases == 0) opt.cases = ax->parsed() ? 1000 : 100;

    if (ax->parsed()) return cmd_axioms(opt);
    if (cs->parsed()) return cmd_cs(opt, "cs", opt.detail);
    if (replay->parsed()) return cmd_cs(opt, "replay", true);
    if (metric->parsed()) return cmd_metric(opt);
    if (cont->parsed()) return cmd_continuity(opt);
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const LogicFault& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return kExitFault;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return kExitFault;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("exactrn");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const std::string& s : storage) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace exactrn::cli
