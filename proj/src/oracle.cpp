#include "bilat/oracle.hpp"

#include <algorithm>
#include <thread>

#include "bilat/check.hpp"

namespace bilat {

bool eval_prop(const Prop& p, const Valuation& v) {
  switch (p.kind()) {
    case Connective::Atom: {
      auto it = v.find(p.name());
      if (it == v.end()) throw MissingAtom(p.name());
      return it->second;
    }
    case Connective::And: return eval_prop(p.left(), v) && eval_prop(p.right(), v);
    case Connective::Or: return eval_prop(p.left(), v) || eval_prop(p.right(), v);
    case Connective::Not: return !eval_prop(p.inner(), v);
    case Connective::Imp: return !eval_prop(p.left(), v) || eval_prop(p.right(), v);
  }
  return false;
}

bool satisfies(const Statement& s, const Valuation& v) {
  bool truth = eval_prop(s.prop, v);
  return s.sign == Sign::Plus ? truth : !truth;
}

bool satisfies(const Judgement& j, const Valuation& v) { return !j.is_falsum() && satisfies(j.statement(), v); }

bool entails(const std::vector<Statement>& assumptions, const Judgement& conclusion, const BasicSystem& b) {
  std::set<std::string> atom_set;
  for (const auto& s : assumptions) s.prop.collect_atoms(atom_set);
  if (!conclusion.is_falsum()) conclusion.statement().prop.collect_atoms(atom_set);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  Valuation v;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    bool respects = true;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      bool value = (mask >> i) & 1U;
      v[atoms[i]] = value;
      if (b.derivable_plus(atoms[i]) && !value) respects = false;
      if (b.negative_axioms().count(atoms[i]) && value) respects = false;
    }
    // An inconsistent system forces some atom both ways; no valuation respects it.
    if (!b.is_consistent()) respects = false;
    if (!respects) continue;
    if (!std::all_of(assumptions.begin(), assumptions.end(), [&](const Statement& s) { return satisfies(s, v); }))
      continue;
    if (!satisfies(conclusion, v)) return false;
  }
  return true;
}

SoundnessReport soundness_sweep(const BasicSystem& b, const std::vector<std::string>& atoms,
                                const EnumerationBounds& bounds, std::size_t jobs, const RuleTable& table) {
  std::vector<Derivation> all = enumerate_derivations(b, atoms, bounds, table);
  std::vector<char> bad(all.size(), 0);
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < all.size(); i += step) {
      Sequent seq = check_derivation(all[i], b, table);
      bad[i] = !entails(seq.assumptions, seq.conclusion, b);
    }
  };
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& t : pool) t.join();
  }
  SoundnessReport report;
  report.derivations = all.size();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (bad[i]) report.violations.push_back(all[i]);
  return report;
}

RuleTable corrupted_rule_table() {
  RuleTable t = RuleTable::make_standard();
  t.mutable_schema(RuleKind::PlusAndE1).conclusion = JudgementPattern::minus(PropPattern::meta(Meta::A));
  return t;
}

}  // namespace bilat
