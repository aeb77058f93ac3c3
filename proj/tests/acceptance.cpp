// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/check.hpp"
#include "bilat/cli.hpp"
#include "bilat/deriv_format.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/oracle.hpp"
#include "bilat/rewrite.hpp"
#include "bilat/sweeps.hpp"
#include "bilat/validity.hpp"
#include "support/reference.hpp"

using namespace bilat;

namespace {

using Clock = std::chrono::steady_clock;

struct Corpus {
  std::string name;
  BasicSystem b;
  std::vector<std::string> atoms;
  EnumerationBounds bounds;
};

// Proposition bounds keep each corpus near a million derivations.
std::vector<Corpus> corpora() {
  BasicSystem a = load_basic_system("+a.");
  return {{"empty {p}", {}, {"p"}, {6, 5}},
          {"empty {p,q}", {}, {"p", "q"}, {6, 4}},
          {"+a {a}", a, {"a"}, {6, 5}},
          {"+a {a,p}", a, {"a", "p"}, {6, 4}}};
}

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail, double seconds) {
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), seconds);
  std::fflush(stdout);
}

int run(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "bilat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

void soundness(const std::vector<Corpus>& cs) {
  auto t = Clock::now();
  std::size_t total = 0, bad = 0;
  std::ostringstream d;
  for (const auto& c : cs) {
    SoundnessReport r = soundness_sweep(c.b, c.atoms, c.bounds);
    total += r.derivations;
    bad += r.violations.size();
    for (const auto& v : r.violations) std::cout << "  violation " << print_derivation_inline(v) << "\n";
  }
  double s = since(t);
  d << total << " derivations, " << bad << " violations";
  report(1, bad == 0 && s < 300, d.str(), s);
}

void normalization_and_subject_reduction(const std::vector<Corpus>& cs) {
  std::size_t total = 0, exhausted = 0, max_steps = 0, redexes = 0, violations = 0;
  double norm_s = 0, sr_s = 0;
  for (const auto& c : cs) {
    auto corpus = enumerate_derivations(c.b, c.atoms, c.bounds);
    auto t = Clock::now();
    NormalizationReport n = normalization_sweep(corpus, Strategy::Innermost, 200);
    norm_s += since(t);
    total += n.derivations;
    exhausted += n.exhausted;
    max_steps = std::max(max_steps, n.max_steps);
    t = Clock::now();
    SubjectReductionReport r = subject_reduction_sweep(corpus, c.b);
    sr_s += since(t);
    redexes += r.redexes;
    violations += r.violations.size();
    for (const auto& v : r.violations)
      std::cout << "  subject reduction: " << v.reason << " in " << print_derivation_inline(v.input) << "\n";
  }
  std::ostringstream a, b;
  a << total << " derivations, " << exhausted << " exhausted at fuel 200, max-steps " << max_steps;
  report(2, exhausted == 0, a.str(), norm_s);
  b << redexes << " redexes, " << violations << " violations";
  report(3, violations == 0, b.str(), sr_s);
}

void rule_preservation() {
  auto t = Clock::now();
  BasicSystem b = load_basic_system("+a. +b.");
  std::size_t tuples = 0, refuted = 0, unknown = 0;
  for (std::size_t bound : {4, 5})
    for (RuleKind k : schema_rules()) {
      PreservationReport r = check_rule_preservation(b, k, bound, 200);
      tuples += r.tuples;
      refuted += r.refuted;
      unknown += r.unknown;
      for (const auto& c : r.counterexamples) std::cout << "  refuted " << print_derivation_inline(c) << "\n";
    }
  double s = since(t);
  std::ostringstream d;
  d << tuples << " tuples at bounds 4 and 5, " << refuted << " refuted, " << unknown << " unknown";
  report(4, refuted == 0 && s < 600, d.str(), s);
}

void fixed_points() {
  auto t = Clock::now();
  std::mt19937 rng(0);
  std::size_t systems = 0, queries = 0, bad = 0;
  while (systems < 10) {
    auto r = ref::random_acyclic_system(rng, 4, 5, true);
    BasicSystem b(r.rules, r.axioms);
    if (!b.is_consistent()) continue;
    ++systems;
    for (const auto& atom : r.atoms) {
      KleeneResult k = kleene_validity_sets(b, atom, 4, 200);
      ++queries;
      bool ok = k.iterations <= k.universe_size + 1 && k.history.size() >= 2 &&
                k.history[k.history.size() - 1] == k.history[k.history.size() - 2];
      for (std::size_t i = 1; i < k.history.size(); ++i)
        for (const auto& d : k.history[i - 1])
          if (std::find(k.history[i].begin(), k.history[i].end(), d) == k.history[i].end()) ok = false;
      if (!ok) {
        ++bad;
        std::cout << "  non-monotone or unstable: " << save_basic_system(b) << " atom " << atom << "\n";
      }
    }
  }
  std::ostringstream d;
  d << systems << " systems, " << queries << " fixed points, " << bad << " violations";
  report(5, bad == 0, d.str(), since(t));
}

void heights() {
  auto t = Clock::now();
  std::mt19937 rng(0);
  std::size_t atoms = 0, mismatches = 0;
  for (int i = 0; i < 20; ++i) {
    auto r = ref::random_acyclic_system(rng, 6, 8, true);
    BasicSystem b(r.rules, r.axioms);
    for (const auto& a : b.atoms()) {
      ++atoms;
      if (b.try_height(a) != ref::brute_height(r.rules, r.axioms, a)) ++mismatches;
    }
  }
  std::size_t accepted = 0;
  for (const char* text : {"+a <- a.", "+a <- b. +b <- a.", "+a <- b. +b <- c. +c <- a. +d."}) {
    try {
      load_basic_system(text);
      ++accepted;
    } catch (const CycleError&) {
    }
  }
  try {
    load_basic_system(ref::read_text(ref::data_file("cyclic.basic")));
    ++accepted;
  } catch (const CycleError&) {
  }
  std::ostringstream d;
  d << atoms << " atoms over 20 systems, " << mismatches << " mismatches, " << accepted << " cyclic systems accepted";
  report(6, mismatches == 0 && accepted == 0, d.str(), since(t));
}

void excluded_middle() {
  auto t = Clock::now();
  const std::string file = ref::data_file("excluded_middle.deriv");
  std::string out;
  bool ok = run({"check", file}, &out) == 0 && out == "|- +(p | ~p)\n";
  Derivation d = parse_derivation(ref::read_text(file));
  NormalizeResult n = normalize(d, Strategy::Innermost, 200);
  ok = ok && n.result == d && n.trace.steps.empty() && !n.exhausted;
  std::ostringstream detail;
  detail << "check ok, normal form is itself, verdicts";
  for (const char* bound : {"5", "7", "9"}) {
    int code = run({"validate", file, "--size-bound", bound}, &out);
    ok = ok && code == 0 && out.rfind("VERDICT Certified", 0) == 0;
    detail << " " << bound << ":" << (code == 0 ? "Certified" : "exit " + std::to_string(code));
    if (out.find("vacuous") != std::string::npos) detail << "(vacuous)";
  }
  double s = since(t);
  report(7, ok && s < 60, detail.str(), s);
}

void verdict_monotonicity() {
  auto t = Clock::now();
  BasicSystem b = load_basic_system(ref::read_text(ref::data_file("golden/golden.basic")));
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(ref::data_file("golden")))
    if (e.path().extension() == ".deriv") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::size_t items = 0, flips = 0, resolved = 0;
  for (bool literal : {false, true}) {
    ReductionOptions opts;
    opts.literal = literal;
    for (const auto& path : files) {
      Derivation d = parse_derivation(ref::read_text(path));
      Status lo = certify(d, b, 3, 600, opts).status;
      Status hi = certify(d, b, 6, 1200, opts).status;
      ++items;
      bool flip = (lo == Status::Certified && hi == Status::Refuted) ||
                  (lo == Status::Refuted && hi == Status::Certified);
      if (flip) {
        ++flips;
        std::cout << "  flip " << path << (literal ? " (literal)" : "") << "\n";
      }
      if (lo == Status::Unknown && hi != Status::Unknown) ++resolved;
    }
  }
  std::ostringstream d;
  d << items << " golden runs, " << flips << " flips, " << resolved << " unknowns resolved";
  report(8, flips == 0, d.str(), since(t));
}

}  // namespace

int main() {
  auto cs = corpora();
  soundness(cs);
  normalization_and_subject_reduction(cs);
  rule_preservation();
  fixed_points();
  heights();
  excluded_middle();
  verdict_monotonicity();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
