#include "bilat/enumerate.hpp"

#include <map>

#include "bilat/check.hpp"

namespace bilat {

namespace {

class ShapeBuilder {
 public:
  ShapeBuilder(const BasicSystem& b, const std::vector<std::string>& atoms, const EnumerationBounds& bounds,
               const RuleTable& table)
      : b_(b), table_(table), bound_(bounds.prop_bound()), atoms_(atoms.begin(), atoms.end()) {
    props_ = props_up_to(atoms, bound_);
    for (const auto& p : props_) {
      statements_.push_back(Statement::plus(p));
      statements_.push_back(Statement::minus(p));
    }
    shapes_.resize(bounds.max_size + 1);
    index_.resize(bounds.max_size + 1);
  }

  std::vector<std::vector<Derivation>> build() {
    std::size_t max_size = shapes_.size() - 1;
    if (max_size >= 1) leaves();
    for (std::size_t n = 2; n <= max_size; ++n) {
      for (std::size_t k = 0; k < kSchemaRuleCount; ++k) {
        const RuleSchema& schema = table_.schema(static_cast<RuleKind>(k));
        if (schema.kind == RuleKind::Falsum && schema.unordered_premises) falsum(n);
        else compositions(schema.premises.size(), n - 1, [&](const std::vector<std::size_t>& sizes) {
            std::vector<Derivation> chosen;
            rule(schema, sizes, 0, MetaBindings{}, chosen, n);
          });
      }
      for (std::size_t i = 0; i < b_.rules().size(); ++i) basic_rule(i, n);
    }
    return std::move(shapes_);
  }

 private:
  void add(std::size_t n, Derivation d) {
    index_[n][d.conclusion()].push_back(shapes_[n].size());
    shapes_[n].push_back(std::move(d));
  }

  bool in_atoms(const std::string& a) const { return atoms_.count(a) > 0; }

  void leaves() {
    for (const auto& s : statements_) add(1, Derivation::assume("", s));
    for (const auto& c : b_.negative_axioms())
      if (in_atoms(c)) add(1, Derivation::axiom(Statement::minus(Prop::atom(c))));
    for (std::size_t i = 0; i < b_.rules().size(); ++i) {
      const auto& r = b_.rules()[i];
      if (r.premises.empty() && in_atoms(r.conclusion))
        add(1, Derivation::basic(i, Statement::plus(Prop::atom(r.conclusion)), {}));
    }
  }

  template <typename F>
  void compositions(std::size_t parts, std::size_t total, F&& f) {
    if (parts == 0) return;
    std::vector<std::size_t> sizes(parts, 1);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
      if (i + 1 == parts) {
        if (left >= 1 && left < shapes_.size()) {
          sizes[i] = left;
          f(sizes);
        }
        return;
      }
      for (std::size_t s = 1; s + (parts - i - 1) <= left; ++s) {
        sizes[i] = s;
        go(i + 1, left - s);
      }
    };
    go(0, total);
  }

  const std::vector<std::size_t>* lookup(std::size_t n, const Judgement& j) const {
    auto it = index_[n].find(j);
    return it == index_[n].end() ? nullptr : &it->second;
  }

  void rule(const RuleSchema& schema, const std::vector<std::size_t>& sizes, std::size_t i, const MetaBindings& env,
            std::vector<Derivation>& chosen, std::size_t n) {
    if (i == schema.premises.size()) return conclude(schema, env, chosen, n);
    const auto& pat = schema.premises[i].judgement;
    std::size_t sz = sizes[i];
    if (auto j = instantiate(pat, env)) {
      if (const auto* hits = lookup(sz, *j))
        for (std::size_t idx : *hits) {
          chosen.push_back(shapes_[sz][idx]);
          rule(schema, sizes, i + 1, env, chosen, n);
          chosen.pop_back();
        }
      return;
    }
    for (const auto& cand : shapes_[sz]) {
      MetaBindings next = env;
      if (!match(pat, cand.conclusion(), next)) continue;
      chosen.push_back(cand);
      rule(schema, sizes, i + 1, next, chosen, n);
      chosen.pop_back();
    }
  }

  void conclude(const RuleSchema& schema, const MetaBindings& env, const std::vector<Derivation>& premises,
                std::size_t n) {
    const auto& pat = schema.conclusion;
    if (auto j = instantiate(pat, env)) {
      emit(schema.kind, *j, premises, n);
      return;
    }
    if (pat.kind == JudgementPattern::Kind::Alpha || pat.kind == JudgementPattern::Kind::AlphaConjugate) {
      for (const auto& s : statements_) {
        MetaBindings next = env;
        if (match(pat, Judgement(s), next)) emit(schema.kind, Judgement(s), premises, n);
      }
      return;
    }
    // One propositional metavariable is left free by the premises.
    for (const auto& p : props_) {
      MetaBindings next = env;
      if (!next.a) next.a = p;
      else if (!next.b) next.b = p;
      auto j = instantiate(pat, next);
      if (j) emit(schema.kind, *j, premises, n);
      else {
        for (const auto& q : props_) {
          MetaBindings both = next;
          both.b = q;
          if (auto jj = instantiate(pat, both)) emit(schema.kind, *jj, premises, n);
        }
      }
    }
  }

  void emit(RuleKind kind, const Judgement& conclusion, const std::vector<Derivation>& premises, std::size_t n) {
    if (!conclusion.is_falsum() && conclusion.statement().prop.size() > bound_) return;
    add(n, Derivation::make(kind, conclusion, premises));
  }

  void falsum(std::size_t n) {
    compositions(2, n - 1, [&](const std::vector<std::size_t>& sizes) {
      for (const auto& left : shapes_[sizes[0]]) {
        if (left.conclusion().is_falsum()) continue;
        if (const auto* hits = lookup(sizes[1], Judgement(conjugate(left.conclusion().statement()))))
          for (std::size_t idx : *hits) emit(RuleKind::Falsum, Judgement::falsum(), {left, shapes_[sizes[1]][idx]}, n);
      }
    });
  }

  void basic_rule(std::size_t i, std::size_t n) {
    const auto& r = b_.rules()[i];
    if (r.premises.empty() || !in_atoms(r.conclusion)) return;
    Statement concl = Statement::plus(Prop::atom(r.conclusion));
    compositions(r.premises.size(), n - 1, [&](const std::vector<std::size_t>& sizes) {
      std::vector<Derivation> chosen;
      std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == sizes.size()) {
          add(n, Derivation::basic(i, concl, chosen));
          return;
        }
        const auto* hits = lookup(sizes[k], Judgement(Statement::plus(Prop::atom(r.premises[k]))));
        if (!hits) return;
        for (std::size_t idx : *hits) {
          chosen.push_back(shapes_[sizes[k]][idx]);
          go(k + 1);
          chosen.pop_back();
        }
      };
      go(0);
    });
  }

  const BasicSystem& b_;
  const RuleTable& table_;
  std::size_t bound_;
  std::set<std::string> atoms_;
  std::vector<Prop> props_;
  std::vector<Statement> statements_;
  std::vector<std::vector<Derivation>> shapes_;
  std::vector<std::map<Judgement, std::vector<std::size_t>>> index_;
};

struct Leaf {
  Statement statement;
  std::vector<std::size_t> binders;  // candidate slot ids
};

struct SlotInfo {
  Statement statement;
};

void collect(const Derivation& d, const RuleTable& table, std::vector<std::pair<std::size_t, Statement>>& active,
             std::vector<Leaf>& leaves, std::vector<SlotInfo>& slots) {
  if (d.is_assumption()) {
    Leaf leaf{d.conclusion().statement(), {}};
    for (const auto& [slot, s] : active)
      if (s == leaf.statement) leaf.binders.push_back(slot);
    leaves.push_back(std::move(leaf));
    return;
  }
  std::size_t slot_count = discharge_slot_count(d.kind());
  std::vector<Statement> discharged;
  std::size_t first_slot = slots.size();
  if (slot_count) {
    std::vector<Judgement> premises;
    for (const auto& p : d.premises()) premises.push_back(p.conclusion());
    auto m = match_schema(table.schema(d.kind()), premises, d.conclusion());
    if (!m) throw std::logic_error("shape node does not match its schema");
    discharged = *m;
    for (const auto& s : discharged) slots.push_back({s});
  }
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    std::size_t pushed = 0;
    for (std::size_t s = 0; s < slot_count; ++s)
      if (discharge_premise(d.kind(), s) == i) {
        active.emplace_back(first_slot + s, discharged[s]);
        ++pushed;
      }
    collect(d.premise(i), table, active, leaves, slots);
    active.erase(active.end() - static_cast<std::ptrdiff_t>(pushed), active.end());
  }
}

Derivation relabel(const Derivation& d, const std::vector<std::string>& leaf_labels, std::size_t& next_leaf,
                   std::size_t& next_slot) {
  if (d.is_assumption()) return Derivation::assume(leaf_labels[next_leaf++], d.conclusion().statement());
  if (d.premises().empty()) return d;
  std::vector<std::string> discharges;
  for (std::size_t s = 0; s < discharge_slot_count(d.kind()); ++s) discharges.push_back("b" + std::to_string(next_slot++));
  std::vector<Derivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(relabel(p, leaf_labels, next_leaf, next_slot));
  if (d.kind() == RuleKind::Basic) return Derivation::basic(d.basic_index(), d.conclusion().statement(), std::move(premises));
  return Derivation::make(d.kind(), d.conclusion(), std::move(premises), std::move(discharges));
}

}  // namespace

std::vector<std::vector<Derivation>> enumerate_shapes(const BasicSystem& b, const std::vector<std::string>& atoms,
                                                      const EnumerationBounds& bounds, const RuleTable& table) {
  return ShapeBuilder(b, atoms, bounds, table).build();
}

void enumerate_labellings(const Derivation& shape, const RuleTable& table, const DerivationSink& sink) {
  std::vector<std::pair<std::size_t, Statement>> active;
  std::vector<Leaf> leaves;
  std::vector<SlotInfo> slots;
  collect(shape, table, active, leaves, slots);

  std::vector<std::string> labels(leaves.size());
  std::map<Statement, std::size_t> classes;  // open label classes used so far, per statement
  std::map<Statement, std::size_t> group_ids;
  for (const auto& leaf : leaves) group_ids.emplace(leaf.statement, group_ids.size());

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == leaves.size()) {
      std::size_t next_leaf = 0, next_slot = 0;
      sink(canonicalize(relabel(shape, labels, next_leaf, next_slot)));
      return;
    }
    const Leaf& leaf = leaves[i];
    for (std::size_t slot : leaf.binders) {
      labels[i] = "b" + std::to_string(slot);
      go(i + 1);
    }
    std::size_t& used = classes[leaf.statement];
    std::string group = "o" + std::to_string(group_ids[leaf.statement]) + "_";
    std::size_t limit = used;
    for (std::size_t c = 0; c <= limit; ++c) {
      labels[i] = group + std::to_string(c);
      if (c == limit) ++used;
      go(i + 1);
      if (c == limit) --used;
    }
  };
  go(0);
}

void enumerate_derivations(const BasicSystem& b, const std::vector<std::string>& atoms,
                           const EnumerationBounds& bounds, const DerivationSink& sink, const RuleTable& table) {
  auto shapes = enumerate_shapes(b, atoms, bounds, table);
  for (const auto& bucket : shapes)
    for (const auto& shape : bucket) enumerate_labellings(shape, table, sink);
}

std::vector<Derivation> enumerate_derivations(const BasicSystem& b, const std::vector<std::string>& atoms,
                                              const EnumerationBounds& bounds, const RuleTable& table) {
  std::vector<Derivation> out;
  enumerate_derivations(b, atoms, bounds, [&](const Derivation& d) { out.push_back(d); }, table);
  return out;
}

}  // namespace bilat
