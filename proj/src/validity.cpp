#include "bilat/validity.hpp"

#include <algorithm>
#include <functional>

#include "bilat/check.hpp"

namespace bilat {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Certified: return "Certified";
    case Status::Refuted: return "Refuted";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool only_basic_and_coordination(const Derivation& d) {
  switch (d.kind()) {
    case RuleKind::Basic:
    case RuleKind::Axiom:
    case RuleKind::Falsum:
    case RuleKind::Raa:
    case RuleKind::Assume:
      break;
    default:
      return false;
  }
  for (const auto& p : d.premises())
    if (!only_basic_and_coordination(p)) return false;
  return true;
}

bool ends_canonically(const Derivation& d) {
  return is_intro(d.kind()) || d.kind() == RuleKind::Basic || d.kind() == RuleKind::Axiom || d.kind() == RuleKind::Raa;
}

}  // namespace

CanonicalForm classify_canonical(const Derivation& d, const BasicSystem& /*b*/, std::size_t fuel,
                                 const ReductionOptions& opts) {
  if (!is_closed(d)) throw OpenDerivationError("classify_canonical needs a closed derivation");
  CanonicalForm cf;
  cf.input_normal = is_normal(d, opts);
  const bool bot = d.conclusion().is_falsum();
  SearchResult sr = reduces_to(d, bot ? DerivationPredicate(only_basic_and_coordination) : ends_canonically, fuel, opts);
  cf.search = sr.status;
  cf.trace = sr.trace;
  if (!sr.found()) return cf;
  const Derivation& r = sr.trace.final_derivation();
  cf.reduct = r;
  cf.rule = r.kind();
  if (bot) {
    cf.kind = CanonicalForm::Kind::BotNormal;
  } else if (r.kind() == RuleKind::Raa) {
    cf.kind = CanonicalForm::Kind::ByRaa;
    cf.body = r.premise(0);
    cf.label = r.discharges()[0];
    cf.discharged = conjugate(r.conclusion().statement());
  } else if (r.kind() == RuleKind::Basic || r.kind() == RuleKind::Axiom) {
    cf.kind = CanonicalForm::Kind::ByBasic;
    cf.basic_index = r.basic_index();
    cf.parts = r.premises();
  } else {
    cf.kind = CanonicalForm::Kind::ByIntro;
    cf.parts = r.premises();
  }
  return cf;
}

struct Certifier::Member {
  Derivation d;
  bool raa = false;
  Status fixed = Status::Unknown;
  std::optional<Derivation> body;
  std::string label;
  bool definitive = false;  // the canonical reduct is the input itself and it is normal
};

struct Certifier::Engine {
  bool ready = false;
  std::vector<Member> plus, minus;
  std::map<Derivation, std::size_t> plus_index, minus_index;
  std::vector<bool> plus_lo, plus_hi, minus_lo, minus_hi;
  KleeneResult result;

  explicit Engine(const Prop& p) : result(p) {}
};

Certifier::Certifier(const BasicSystem& b, std::vector<std::string> atoms, const CertifyConfig& config)
    : b_(b), config_(config) {
  if (!b.is_consistent()) throw InconsistentSystem("basic system is inconsistent: validity is not defined over it");
  if (config_.prop_bound == 0) config_.prop_bound = 1;
  universe_ = std::make_unique<Universe>(b, std::move(atoms), config_.prop_bound);
}

Certifier::~Certifier() = default;

Status Certifier::bot_status(const Derivation& d) {
  Derivation key = canonicalize(d);
  if (auto it = bot_memo_.find(key); it != bot_memo_.end()) return it->second;
  SearchResult sr = reduces_to(key, only_basic_and_coordination, config_.fuel, config_.reduction);
  Status s = sr.status == SearchStatus::Found       ? Status::Certified
             : sr.status == SearchStatus::Exhausted ? Status::Refuted
                                                    : Status::Unknown;
  bot_memo_.emplace(std::move(key), s);
  return s;
}

Certifier::Member Certifier::classify_member(const Derivation& d) {
  Member m{d, false, Status::Unknown, std::nullopt, {}, false};
  CanonicalForm cf = classify_canonical(d, b_, config_.fuel, config_.reduction);
  m.definitive = cf.input_normal && cf.trace->steps.empty();
  switch (cf.kind) {
    case CanonicalForm::Kind::NotCanonical:
      m.fixed = cf.search == SearchStatus::Exhausted ? Status::Refuted : Status::Unknown;
      return m;
    case CanonicalForm::Kind::BotNormal:
      m.fixed = Status::Certified;
      return m;
    case CanonicalForm::Kind::ByRaa:
      m.raa = true;
      m.body = cf.body;
      m.label = *cf.label;
      return m;
    case CanonicalForm::Kind::ByBasic:
    case CanonicalForm::Kind::ByIntro:
      break;
  }
  if (cf.rule == RuleKind::Axiom) {
    m.fixed = Status::Certified;
    return m;
  }
  bool all_certified = true, any_refuted = false;
  for (const auto& part : cf.parts) {
    Status s = is_closed(part) ? closed_status(part) : open_status(part);
    all_certified = all_certified && s == Status::Certified;
    any_refuted = any_refuted || s == Status::Refuted;
  }
  if (all_certified) m.fixed = Status::Certified;
  else if (any_refuted && m.definitive) m.fixed = Status::Refuted;
  else m.fixed = Status::Unknown;
  return m;
}

Status Certifier::raa_status(const Member& m, const std::vector<Derivation>& conj_hi,
                             const std::vector<Derivation>& conj_lo, bool* vacuous) {
  if (vacuous) *vacuous = conj_hi.empty();
  bool all_certified = true;
  for (const auto& alt : conj_hi) {
    if (bot_status(substitute(*m.body, {{m.label, alt}})) != Status::Certified) {
      all_certified = false;
      break;
    }
  }
  if (all_certified) return Status::Certified;
  if (m.definitive)
    for (const auto& alt : conj_lo)
      if (bot_status(substitute(*m.body, {{m.label, alt}})) == Status::Refuted) return Status::Refuted;
  return Status::Unknown;
}

Certifier::Engine& Certifier::engine(const Prop& p) {
  auto it = engines_.find(p);
  if (it != engines_.end()) {
    if (!it->second->ready) throw std::logic_error("validity engine re-entered for " + print_prop(p));
    return *it->second;
  }
  auto& e = *engines_.emplace(p, std::make_unique<Engine>(p)).first->second;
  const std::size_t bound = config_.size_bound;
  auto load = [&](Sign sign, std::vector<Member>& members, std::map<Derivation, std::size_t>& index) {
    for (const auto& d : universe_->up_to(Statement{sign, p}, bound)) {
      index.emplace(d, members.size());
      members.push_back(classify_member(d));
    }
  };
  load(Sign::Plus, e.plus, e.plus_index);
  load(Sign::Minus, e.minus, e.minus_index);

  auto members_of = [](const std::vector<Member>& ms, const std::vector<bool>& mask) {
    std::vector<Derivation> out;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (mask[i]) out.push_back(ms[i].d);
    return out;
  };
  // One application of F: lower and upper approximations of F(S) from those of S.
  auto apply = [&](const std::vector<Member>& ms, const std::vector<Member>& conj, const std::vector<bool>& s_lo,
                   const std::vector<bool>& s_hi, std::vector<bool>& out_lo, std::vector<bool>& out_hi) {
    auto hi = members_of(conj, s_hi), lo = members_of(conj, s_lo);
    out_lo.assign(ms.size(), false);
    out_hi.assign(ms.size(), false);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Status s = ms[i].raa ? raa_status(ms[i], hi, lo, nullptr) : ms[i].fixed;
      out_lo[i] = s == Status::Certified;
      out_hi[i] = s != Status::Refuted;
    }
  };

  std::vector<bool> x_lo(e.plus.size(), false), x_hi(e.plus.size(), false), y_lo, y_hi;
  e.result.history.push_back({});
  const std::size_t cap = e.plus.size() + e.minus.size() + 2;
  for (std::size_t n = 1;; ++n) {
    apply(e.minus, e.plus, x_lo, x_hi, y_lo, y_hi);
    std::vector<bool> nx_lo, nx_hi;
    apply(e.plus, e.minus, y_lo, y_hi, nx_lo, nx_hi);
    bool stable = nx_lo == x_lo && nx_hi == x_hi;
    x_lo = std::move(nx_lo);
    x_hi = std::move(nx_hi);
    e.result.history.push_back(members_of(e.plus, x_lo));
    if (stable || n > cap) {
      e.result.iterations = n;
      break;
    }
  }
  e.plus_lo = x_lo;
  e.plus_hi = x_hi;
  e.minus_lo = y_lo;
  e.minus_hi = y_hi;

  e.result.plus = {Statement::plus(p), members_of(e.plus, x_lo), bound};
  e.result.minus = {Statement::minus(p), members_of(e.minus, y_lo), bound};
  for (std::size_t i = 0; i < e.plus.size(); ++i)
    if (x_hi[i] && !x_lo[i]) e.result.plus_unknown.push_back(e.plus[i].d);
  for (std::size_t i = 0; i < e.minus.size(); ++i)
    if (y_hi[i] && !y_lo[i]) e.result.minus_unknown.push_back(e.minus[i].d);
  e.result.universe_size = e.plus.size() + e.minus.size();
  e.ready = true;
  return e;
}

const KleeneResult& Certifier::fixed_point(const Prop& p) { return engine(p).result; }

Status Certifier::closed_status(const Derivation& d) {
  if (d.conclusion().is_falsum()) return bot_status(d);
  Derivation key = canonicalize(d);
  if (auto it = closed_memo_.find(key); it != closed_memo_.end()) return it->second;
  const Statement& s = key.conclusion().statement();
  Engine& e = engine(s.prop);
  const bool plus = s.sign == Sign::Plus;
  const auto& index = plus ? e.plus_index : e.minus_index;
  Status status;
  if (auto it = index.find(key); it != index.end()) {
    const auto& lo = plus ? e.plus_lo : e.minus_lo;
    const auto& hi = plus ? e.plus_hi : e.minus_hi;
    status = lo[it->second] ? Status::Certified : hi[it->second] ? Status::Unknown : Status::Refuted;
  } else {
    Member m = classify_member(key);
    if (m.raa) {
      const auto& conj = plus ? e.minus : e.plus;
      const auto& c_lo = plus ? e.minus_lo : e.plus_lo;
      const auto& c_hi = plus ? e.minus_hi : e.plus_hi;
      std::vector<Derivation> hi, lo;
      for (std::size_t i = 0; i < conj.size(); ++i) {
        if (c_hi[i]) hi.push_back(conj[i].d);
        if (c_lo[i]) lo.push_back(conj[i].d);
      }
      status = raa_status(m, hi, lo, nullptr);
    } else {
      status = m.fixed;
    }
  }
  closed_memo_.emplace(std::move(key), status);
  return status;
}

Status Certifier::open_status(const Derivation& d, bool* vacuous) {
  if (vacuous) *vacuous = false;
  std::map<std::string, Statement> hyps;
  for (const auto& a : open_assumptions(d)) hyps.emplace(a.label, a.statement);
  if (hyps.empty()) return closed_status(d);

  std::vector<std::string> labels;
  std::vector<std::vector<Derivation>> choices;
  bool complete = true;
  for (const auto& [label, s] : hyps) {
    const KleeneResult& k = fixed_point(s.prop);
    const bool plus = s.sign == Sign::Plus;
    labels.push_back(label);
    choices.push_back(plus ? k.plus.members : k.minus.members);
    if (!(plus ? k.plus_unknown : k.minus_unknown).empty()) complete = false;
    if (choices.back().empty() && vacuous) *vacuous = true;
  }
  bool all_certified = true;
  std::vector<std::size_t> pos(labels.size(), 0);
  std::function<void(std::size_t, Bindings&)> go = [&](std::size_t i, Bindings& bind) {
    if (!all_certified) return;
    if (i == labels.size()) {
      if (closed_status(substitute(d, bind)) != Status::Certified) all_certified = false;
      return;
    }
    for (const auto& c : choices[i]) {
      bind.insert_or_assign(labels[i], c);
      go(i + 1, bind);
      if (!all_certified) return;
    }
    bind.erase(labels[i]);
  };
  Bindings bind;
  go(0, bind);
  return all_certified && complete ? Status::Certified : Status::Unknown;
}

Verdict Certifier::certify(const Derivation& d) {
  check_derivation(d, b_);
  Verdict v;
  v.size_bound = config_.size_bound;
  v.fuel = config_.fuel;
  if (!is_closed(d)) {
    bool vacuous = false;
    v.status = open_status(d, &vacuous);
    v.vacuous = vacuous;
    std::set<Statement> hyps;
    for (const auto& a : open_assumptions(d)) hyps.insert(a.statement);
    for (const auto& s : hyps) {
      const KleeneResult& k = fixed_point(s.prop);
      std::size_t n = (s.sign == Sign::Plus ? k.plus.members : k.minus.members).size();
      v.notes.push_back("assumption " + print_statement(s) + ": " + std::to_string(n) +
                        " certified closed derivations within size " + std::to_string(config_.size_bound));
    }
    if (v.status == Status::Certified) v.notes.push_back("certified up to the bound");
    return v;
  }
  v.status = closed_status(d);
  if (d.conclusion().is_falsum()) return v;
  CanonicalForm cf = classify_canonical(d, b_, config_.fuel, config_.reduction);
  if (!cf.trace->steps.empty() || cf.kind != CanonicalForm::Kind::NotCanonical) v.witness = cf.trace;
  if (cf.kind == CanonicalForm::Kind::ByRaa) {
    const Statement& hyp = *cf.discharged;
    const KleeneResult& k = fixed_point(hyp.prop);
    const bool plus = hyp.sign == Sign::Plus;
    std::size_t certified = (plus ? k.plus.members : k.minus.members).size();
    std::size_t unknown = (plus ? k.plus_unknown : k.minus_unknown).size();
    v.vacuous = certified + unknown == 0;
    v.notes.push_back("raa obligation over " + std::to_string(certified + unknown) + " derivations of " +
                      print_statement(hyp) + " within size " + std::to_string(config_.size_bound));
    if (v.vacuous) v.notes.push_back("vacuous: no candidate derivation of " + print_statement(hyp) + " at this bound");
  } else if (cf.kind == CanonicalForm::Kind::NotCanonical) {
    v.notes.push_back(cf.search == SearchStatus::Exhausted ? "no canonical reduct exists"
                                                           : "fuel spent before a canonical reduct was found");
    if (v.status == Status::Refuted) v.counterexample = d;
  }
  return v;
}

std::vector<std::string> certification_atoms(const BasicSystem& b, const Derivation& d) {
  std::set<std::string> atoms = b.atoms();
  std::function<void(const Derivation&)> walk = [&](const Derivation& x) {
    if (!x.conclusion().is_falsum()) x.conclusion().statement().prop.collect_atoms(atoms);
    for (const auto& p : x.premises()) walk(p);
  };
  walk(d);
  return {atoms.begin(), atoms.end()};
}

std::size_t largest_prop(const Derivation& d) {
  std::size_t best = d.conclusion().is_falsum() ? 0 : d.conclusion().statement().prop.size();
  for (const auto& p : d.premises()) best = std::max(best, largest_prop(p));
  return best;
}

Verdict certify(const Derivation& d, const BasicSystem& b, std::size_t size_bound, std::size_t fuel,
                const ReductionOptions& opts) {
  CertifyConfig config{size_bound, fuel, std::max<std::size_t>(1, largest_prop(d)), opts};
  Certifier c(b, certification_atoms(b, d), config);
  return c.certify(d);
}

KleeneResult kleene_validity_sets(const BasicSystem& b, const std::string& atom, std::size_t size_bound,
                                  std::size_t fuel, const ReductionOptions& opts) {
  std::set<std::string> atoms = b.atoms();
  atoms.insert(atom);
  CertifyConfig config{size_bound, fuel, 2, opts};
  Certifier c(b, {atoms.begin(), atoms.end()}, config);
  return c.fixed_point(Prop::atom(atom));
}

PreservationReport check_rule_preservation(const BasicSystem& b, RuleKind rule, std::size_t size_bound,
                                           std::size_t fuel, std::size_t prop_bound, const ReductionOptions& opts,
                                           const std::vector<std::string>& extra_atoms) {
  std::set<std::string> atom_set = b.atoms();
  atom_set.insert(extra_atoms.begin(), extra_atoms.end());
  if (atom_set.empty()) atom_set.insert("p");
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  CertifyConfig config{size_bound, fuel, prop_bound, opts};
  Certifier cert(b, atoms, config);
  Universe& uni = cert.universe();

  PreservationReport report;
  report.rule = rule;
  const RuleSchema& schema = RuleTable::standard().schema(rule);
  auto props = props_up_to(atoms, prop_bound);
  auto fits = [&](const Judgement& j) { return j.is_falsum() || j.statement().prop.size() <= prop_bound; };

  bool uses_a = false, uses_b = false, uses_alpha = false;
  auto note = [&](const JudgementPattern& p) {
    uses_a = uses_a || mentions_meta(p, Meta::A);
    uses_b = uses_b || mentions_meta(p, Meta::B);
    uses_alpha = uses_alpha || mentions_alpha(p);
  };
  note(schema.conclusion);
  for (const auto& p : schema.premises) {
    note(p.judgement);
    if (p.discharge) note(*p.discharge);
  }
  std::vector<std::optional<Prop>> as{std::nullopt}, bs{std::nullopt};
  std::vector<std::optional<Statement>> alphas{std::nullopt};
  if (uses_a) as.assign(props.begin(), props.end());
  if (uses_b) bs.assign(props.begin(), props.end());
  if (uses_alpha) {
    alphas.clear();
    for (const auto& p : props) {
      alphas.push_back(Statement::plus(p));
      alphas.push_back(Statement::minus(p));
    }
  }

  for (const auto& a : as)
    for (const auto& bb : bs)
      for (const auto& alpha : alphas) {
        MetaBindings env{a, bb, alpha};
        auto concl = instantiate(schema.conclusion, env);
        if (!concl || !fits(*concl)) continue;
        std::vector<Judgement> goals;
        std::vector<std::optional<Statement>> hyps;
        bool ok = true;
        for (const auto& p : schema.premises) {
          auto j = instantiate(p.judgement, env);
          std::optional<Statement> h;
          if (p.discharge) {
            auto dj = instantiate(*p.discharge, env);
            if (!dj || dj->is_falsum() || !fits(*dj)) ok = false;
            else h = dj->statement();
          }
          if (!j || !fits(*j)) ok = false;
          if (!ok) break;
          goals.push_back(*j);
          hyps.push_back(h);
        }
        if (!ok) continue;
        ++report.instantiations;

        std::vector<std::vector<Derivation>> candidates;
        for (std::size_t i = 0; i < goals.size(); ++i) {
          std::vector<Derivation> cs;
          if (!hyps[i]) {
            const KleeneResult& k = cert.fixed_point(goals[i].statement().prop);
            cs = goals[i].statement().sign == Sign::Plus ? k.plus.members : k.minus.members;
          } else {
            for (const auto& d : uni.up_to(goals[i], size_bound, {*hyps[i]}))
              if (cert.open_status(d) == Status::Certified) cs.push_back(d);
          }
          candidates.push_back(std::move(cs));
        }

        std::vector<Derivation> chosen;
        std::function<void(std::size_t)> go = [&](std::size_t i) {
          if (i == goals.size()) {
            std::set<std::string> used;
            for (const auto& c : chosen) {
              auto l = all_labels(c);
              used.insert(l.begin(), l.end());
            }
            std::string label = fresh_label(used, "h");
            std::vector<Derivation> premises;
            std::vector<std::string> discharges;
            for (std::size_t k = 0; k < chosen.size(); ++k) {
              if (hyps[k]) {
                premises.push_back(rename_free(chosen[k], Universe::slot_label(0), label));
                discharges.push_back(label);
              } else {
                premises.push_back(chosen[k]);
              }
            }
            Derivation result = canonicalize(Derivation::make(rule, *concl, std::move(premises), std::move(discharges)));
            ++report.tuples;
            switch (cert.closed_status(result)) {
              case Status::Certified: ++report.certified; break;
              case Status::Unknown: ++report.unknown; break;
              case Status::Refuted:
                ++report.refuted;
                report.counterexamples.push_back(result);
                break;
            }
            return;
          }
          for (const auto& c : candidates[i]) {
            chosen.push_back(c);
            go(i + 1);
            chosen.pop_back();
          }
        };
        go(0);
      }
  return report;
}

std::string format_verdict(const Verdict& v, const std::string& source) {
  std::string out = "VERDICT " + std::string(status_name(v.status)) + " bound=" + std::to_string(v.size_bound) + "," +
                    std::to_string(v.fuel) + " " + source + "\n";
  for (const auto& n : v.notes) out += "# " + n + "\n";
  return out;
}

}  // namespace bilat
