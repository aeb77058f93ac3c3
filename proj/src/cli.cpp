#include "bilat/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bilat/basicsys.hpp"
#include "bilat/check.hpp"
#include "bilat/deriv_format.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/oracle.hpp"
#include "bilat/rewrite.hpp"
#include "bilat/sweeps.hpp"
#include "bilat/validity.hpp"

namespace bilat {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write '" + path + "'");
  o << text;
}

BasicSystem load_system(const std::string& path) {
  if (path.empty()) return BasicSystem{};
  try {
    return load_basic_system(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const CycleError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Derivation load_derivation(const std::string& path) {
  try {
    return parse_derivation(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::size_t default_fuel() {
  if (const char* env = std::getenv("BILAT_FUEL")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 10000;
}

std::vector<std::string> split_atoms(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      if (!is_identifier(item)) throw InputError("'" + item + "' is not an atom name");
      out.push_back(item);
    }
  return out;
}

struct Options {
  std::string derivation;
  std::string basic;
  std::string strategy = "innermost";
  std::size_t fuel = 0;
  std::size_t size_bound = 0;
  std::size_t prop_bound = 0;
  std::string trace;
  std::string output;
  bool literal = false;
  std::string suite;
  std::string atoms;
  std::string rule;
  std::size_t jobs = 1;
  unsigned long long seed = 0;
};

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    BasicSystem b = load_system(o.basic);
    Derivation d = load_derivation(o.derivation);
    out << format_sequent(check_derivation(d, b)) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_normalize(const Options& o, std::ostream& out, std::ostream& err) {
  auto strategy = strategy_from_name(o.strategy);
  if (!strategy) {
    err << "error: unknown strategy '" << o.strategy << "'\n";
    return kExitUsage;
  }
  NormalizeResult r{Derivation::assume("x", Statement::plus(Prop::atom("p"))), {Derivation::assume("x", Statement::plus(Prop::atom("p"))), {}}, false};
  try {
    BasicSystem b = load_system(o.basic);
    Derivation d = load_derivation(o.derivation);
    check_derivation(d, b);
    r = normalize(d, *strategy, o.fuel, ReductionOptions{o.literal});
    if (o.output.empty()) out << print_derivation(r.result);
    else write_file(o.output, print_derivation(r.result));
    if (!o.trace.empty()) write_file(o.trace, format_trace(r.trace));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "steps " << r.trace.steps.size() << "\n";
  if (r.exhausted) {
    err << "fuel exhausted after " << o.fuel << " steps; redexes remain\n";
    return 2;
  }
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  BasicSystem b;
  Derivation d = Derivation::assume("x", Statement::plus(Prop::atom("p")));
  try {
    b = load_system(o.basic);
    d = load_derivation(o.derivation);
    check_derivation(d, b);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  if (!b.is_consistent()) {
    err << "refused: basic system is inconsistent; validity is undefined over it\n";
    return 3;
  }
  CertifyConfig config;
  config.size_bound = o.size_bound;
  config.fuel = o.fuel;
  config.prop_bound = o.prop_bound ? o.prop_bound : std::max<std::size_t>(1, largest_prop(d));
  config.reduction.literal = o.literal;
  Certifier c(b, certification_atoms(b, d), config);
  Verdict v = c.certify(d);
  out << format_verdict(v, o.derivation);
  switch (v.status) {
    case Status::Certified: return 0;
    case Status::Refuted: return 1;
    case Status::Unknown: return 2;
  }
  return 2;
}

std::vector<std::string> sweep_atoms(const Options& o, const BasicSystem& b) {
  if (!o.atoms.empty()) return split_atoms(o.atoms);
  if (!b.atoms().empty()) return {b.atoms().begin(), b.atoms().end()};
  return {"p"};
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  BasicSystem b;
  try {
    b = load_system(o.basic);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!b.is_consistent()) {
    err << "refused: basic system is inconsistent\n";
    return 3;
  }
  const ReductionOptions ropts{o.literal};
  out << "suite " << o.suite << "\n";
  out << "seed " << o.seed << "\n";

  if (o.suite == "soundness" || o.suite == "normalization") {
    std::vector<std::string> atoms;
    try {
      atoms = sweep_atoms(o, b);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    EnumerationBounds bounds{o.size_bound ? o.size_bound : 5, o.prop_bound ? o.prop_bound : 3};
    out << "atoms";
    for (const auto& a : atoms) out << " " << a;
    out << "\nsize-bound " << bounds.max_size << "\nprop-bound " << bounds.prop_bound() << "\n";
    if (o.suite == "soundness") {
      SoundnessReport r = soundness_sweep(b, atoms, bounds, o.jobs);
      out << "derivations " << r.derivations << "\nviolations " << r.violations.size() << "\n";
      for (const auto& v : r.violations) out << "violation " << print_derivation_inline(v) << "\n";
      return r.violations.empty() ? 0 : 1;
    }
    auto strategy = strategy_from_name(o.strategy);
    if (!strategy) {
      err << "error: unknown strategy '" << o.strategy << "'\n";
      return kExitUsage;
    }
    auto corpus = enumerate_derivations(b, atoms, bounds);
    NormalizationReport r = normalization_sweep(corpus, *strategy, o.fuel, o.jobs, ropts);
    out << "strategy " << strategy_name(*strategy) << "\nfuel " << o.fuel << "\n";
    out << "derivations " << r.derivations << "\nexhausted " << r.exhausted << "\nmax-steps " << r.max_steps
        << "\ntotal-steps " << r.total_steps << "\n";
    for (const auto& f : r.failures) out << "exhausted " << print_derivation_inline(f) << "\n";
    return r.exhausted == 0 ? 0 : 1;
  }

  if (o.suite == "rule-preservation") {
    std::vector<RuleKind> rules;
    if (o.rule.empty() || o.rule == "all") {
      rules = schema_rules();
    } else {
      auto k = rule_from_name(o.rule);
      if (!k || static_cast<std::size_t>(*k) >= kSchemaRuleCount) {
        err << "error: unknown rule '" << o.rule << "'\n";
        return kExitUsage;
      }
      rules = {*k};
    }
    std::vector<std::string> extra;
    try {
      extra = o.atoms.empty() ? std::vector<std::string>{} : split_atoms(o.atoms);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::size_t bound = o.size_bound ? o.size_bound : 4;
    std::size_t prop = o.prop_bound ? o.prop_bound : 3;
    out << "size-bound " << bound << "\nprop-bound " << prop << "\nfuel " << o.fuel << "\n";
    out << std::left << std::setw(8) << "rule" << std::right << std::setw(10) << "tuples" << std::setw(11)
        << "certified" << std::setw(9) << "unknown" << std::setw(9) << "refuted" << "\n";
    std::size_t refuted = 0;
    for (RuleKind k : rules) {
      PreservationReport r = check_rule_preservation(b, k, bound, o.fuel, prop, ropts, extra);
      out << std::left << std::setw(8) << rule_name(k) << std::right << std::setw(10) << r.tuples << std::setw(11)
          << r.certified << std::setw(9) << r.unknown << std::setw(9) << r.refuted
          << (r.vacuous() ? "  (vacuous)" : "") << "\n";
      for (const auto& c : r.counterexamples) out << "counterexample " << print_derivation_inline(c) << "\n";
      refuted += r.refuted;
    }
    out << "refuted-total " << refuted << "\n";
    return refuted == 0 ? 0 : 1;
  }

  err << "error: unknown suite '" << o.suite << "'\n";
  return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof kernel, normalizer and validity certifier for signed natural deduction", "bilat"};
  app.require_subcommand(1);
  Options o;
  o.fuel = default_fuel();

  auto* check = app.add_subcommand("check", "check a derivation file and print its sequent");
  check->add_option("derivation", o.derivation, "derivation file")->required();
  check->add_option("--basic", o.basic, "basic system file");

  auto* norm = app.add_subcommand("normalize", "reduce a derivation to normal form");
  norm->add_option("derivation", o.derivation, "derivation file")->required();
  norm->add_option("--basic", o.basic, "basic system file");
  norm->add_option("--strategy", o.strategy, "innermost | outermost | given-order");
  norm->add_option("--fuel", o.fuel, "maximum number of reduction steps");
  norm->add_option("--trace", o.trace, "write the reduction trace here");
  norm->add_option("--out", o.output, "write the normal form here instead of stdout");
  norm->add_flag("--literal-R", o.literal, "use only the printed reduction set");

  auto* val = app.add_subcommand("validate", "certify validity within a size and fuel budget");
  val->add_option("derivation", o.derivation, "derivation file")->required();
  val->add_option("--basic", o.basic, "basic system file");
  val->add_option("--size-bound", o.size_bound, "largest derivation size in generated universes")->default_val(7);
  val->add_option("--fuel", o.fuel, "reduction budget per search");
  val->add_option("--prop-bound", o.prop_bound, "largest proposition size in universes (0: from the input)");
  val->add_flag("--literal-R", o.literal, "use only the printed reduction set");

  auto* sweep = app.add_subcommand("sweep", "run an exhaustive property suite");
  sweep->add_option("--suite", o.suite, "soundness | normalization | rule-preservation")->required();
  sweep->add_option("--basic", o.basic, "basic system file");
  sweep->add_option("--atoms", o.atoms, "comma-separated atoms");
  sweep->add_option("--size-bound", o.size_bound, "derivation size bound (default 5, or 4 for rule-preservation)");
  sweep->add_option("--prop-bound", o.prop_bound, "proposition size bound (default 3)");
  sweep->add_option("--fuel", o.fuel, "reduction budget");
  sweep->add_option("--strategy", o.strategy, "normalization strategy");
  sweep->add_option("--rule", o.rule, "rule for rule-preservation (default: all)");
  sweep->add_option("--jobs", o.jobs, "worker threads");
  sweep->add_option("--seed", o.seed, "seed recorded in the report");
  sweep->add_flag("--literal-R", o.literal, "use only the printed reduction set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*check) return cmd_check(o, out, err);
  if (*norm) return cmd_normalize(o, out, err);
  if (*val) return cmd_validate(o, out, err);
  if (*sweep) return cmd_sweep(o, out, err);
  return kExitUsage;
}

}  // namespace bilat
