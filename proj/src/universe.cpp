#include "bilat/universe.hpp"

#include <functional>

namespace bilat {

Universe::Universe(const BasicSystem& b, std::vector<std::string> atoms, std::size_t prop_bound,
                   const RuleTable& table)
    : b_(b), atoms_(std::move(atoms)), prop_bound_(prop_bound), table_(table) {
  props_ = props_up_to(atoms_, prop_bound_);
}

bool Universe::fits(const Judgement& j) const {
  return j.is_falsum() || j.statement().prop.size() <= prop_bound_;
}

const std::vector<Derivation>& Universe::exact(const Judgement& goal, std::size_t size,
                                               const std::vector<Statement>& context) {
  Key key{goal, size, context};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto result = generate(goal, size, context);
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<Derivation> Universe::up_to(const Judgement& goal, std::size_t max_size,
                                        const std::vector<Statement>& context) {
  std::vector<Derivation> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto& bucket = exact(goal, n, context);
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

namespace {

struct PremiseGoal {
  Judgement judgement;
  std::optional<Statement> discharge;
};

}  // namespace

std::vector<Derivation> Universe::generate(const Judgement& goal, std::size_t size,
                                           const std::vector<Statement>& context) {
  std::vector<Derivation> out;
  if (size == 0 || !fits(goal)) return out;

  if (size == 1) {
    if (goal.is_falsum()) return out;
    const Statement& s = goal.statement();
    for (std::size_t i = 0; i < context.size(); ++i)
      if (context[i] == s) out.push_back(Derivation::assume(slot_label(i), s));
    if (s.sign == Sign::Minus && s.prop.is_atom() && b_.negative_axioms().count(s.prop.name()))
      out.push_back(Derivation::axiom(s));
    for (std::size_t i = 0; i < b_.rules().size(); ++i) {
      const auto& r = b_.rules()[i];
      if (r.premises.empty() && s.sign == Sign::Plus && s.prop.is_atom() && s.prop.name() == r.conclusion)
        out.push_back(Derivation::basic(i, s, {}));
    }
    return out;
  }

  const std::string binder = slot_label(context.size());

  // Fills premises of every size split and emits one node per combination.
  auto combine = [&](const std::vector<PremiseGoal>& premises, const std::function<Derivation(std::vector<Derivation>)>& make) {
    std::size_t m = premises.size();
    std::vector<std::vector<Statement>> contexts;
    for (const auto& p : premises) {
      auto c = context;
      if (p.discharge) c.push_back(*p.discharge);
      contexts.push_back(std::move(c));
    }
    std::vector<Derivation> chosen;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
      if (i == m) {
        if (left == 0) out.push_back(make(chosen));
        return;
      }
      std::size_t rest = m - i - 1;
      for (std::size_t s = 1; s + rest <= left; ++s) {
        if (i + 1 == m && s != left) continue;
        const auto& bucket = exact(premises[i].judgement, s, contexts[i]);
        for (const auto& d : bucket) {
          chosen.push_back(d);
          go(i + 1, left - s);
          chosen.pop_back();
        }
      }
    };
    go(0, size - 1);
  };

  for (std::size_t k = 0; k < kSchemaRuleCount; ++k) {
    const RuleSchema& schema = table_.schema(static_cast<RuleKind>(k));
    MetaBindings base;
    if (!match(schema.conclusion, goal, base)) continue;

    bool need_a = false, need_b = false;
    for (const auto& p : schema.premises) {
      for (const auto* pat : {&p.judgement, p.discharge ? &*p.discharge : nullptr}) {
        if (!pat) continue;
        need_a = need_a || (!base.a && mentions_meta(*pat, Meta::A));
        need_b = need_b || (!base.b && mentions_meta(*pat, Meta::B));
      }
    }
    std::vector<std::optional<Prop>> a_choices{std::nullopt}, b_choices{std::nullopt};
    if (need_a) a_choices.assign(props_.begin(), props_.end());
    if (need_b) b_choices.assign(props_.begin(), props_.end());

    for (const auto& a : a_choices) {
      for (const auto& bb : b_choices) {
        MetaBindings env = base;
        if (a) env.a = a;
        if (bb) env.b = bb;
        std::vector<PremiseGoal> premises;
        std::vector<std::string> discharges;
        bool ok = true;
        for (const auto& p : schema.premises) {
          auto j = instantiate(p.judgement, env);
          if (!j || !fits(*j)) {
            ok = false;
            break;
          }
          PremiseGoal g{*j, std::nullopt};
          if (p.discharge) {
            auto dj = instantiate(*p.discharge, env);
            if (!dj || dj->is_falsum() || !fits(*dj)) {
              ok = false;
              break;
            }
            g.discharge = dj->statement();
            discharges.push_back(binder);
          }
          premises.push_back(std::move(g));
        }
        if (!ok) continue;
        auto kind = schema.kind;
        auto make = [&](std::vector<Derivation> ps) { return Derivation::make(kind, goal, std::move(ps), discharges); };
        combine(premises, make);
        if (schema.unordered_premises && premises.size() == 2) {
          std::vector<PremiseGoal> swapped{premises[1], premises[0]};
          combine(swapped, make);
        }
      }
    }
  }

  if (!goal.is_falsum() && goal.statement().sign == Sign::Plus && goal.statement().prop.is_atom()) {
    const Statement s = goal.statement();
    for (std::size_t i = 0; i < b_.rules().size(); ++i) {
      const auto& r = b_.rules()[i];
      if (r.premises.empty() || r.conclusion != s.prop.name()) continue;
      std::vector<PremiseGoal> premises;
      for (const auto& p : r.premises) premises.push_back({Statement::plus(Prop::atom(p)), std::nullopt});
      combine(premises, [&](std::vector<Derivation> ps) { return Derivation::basic(i, s, std::move(ps)); });
    }
  }
  return out;
}

}  // namespace bilat
