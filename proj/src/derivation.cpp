#include "bilat/derivation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace bilat {

namespace {

struct RuleInfo {
  RuleKind kind;
  std::string_view name;
};

constexpr std::array<RuleInfo, 25> kRuleNames = {{
    {RuleKind::PlusAndI, "+&I"},     {RuleKind::PlusAndE1, "+&E1"},   {RuleKind::PlusAndE2, "+&E2"},
    {RuleKind::MinusAndI1, "-&I1"},  {RuleKind::MinusAndI2, "-&I2"},  {RuleKind::MinusAndE, "-&E"},
    {RuleKind::PlusOrI1, "+|I1"},    {RuleKind::PlusOrI2, "+|I2"},    {RuleKind::PlusOrE, "+|E"},
    {RuleKind::MinusOrI, "-|I"},     {RuleKind::MinusOrE1, "-|E1"},   {RuleKind::MinusOrE2, "-|E2"},
    {RuleKind::PlusNegI, "+~I"},     {RuleKind::PlusNegE, "+~E"},     {RuleKind::MinusNegI, "-~I"},
    {RuleKind::MinusNegE, "-~E"},    {RuleKind::PlusImpI, "+->I"},    {RuleKind::PlusImpE, "+->E"},
    {RuleKind::MinusImpI, "-->I"},   {RuleKind::MinusImpE1, "-->E1"}, {RuleKind::MinusImpE2, "-->E2"},
    {RuleKind::Falsum, "bot"},       {RuleKind::Raa, "raa"},          {RuleKind::Axiom, "axiom"},
    {RuleKind::Assume, "assume"},
}};

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view rule_name(RuleKind k) {
  if (k == RuleKind::Basic) return "basic";
  for (const auto& info : kRuleNames)
    if (info.kind == k) return info.name;
  return "?";
}

std::optional<RuleKind> rule_from_name(std::string_view name) {
  for (const auto& info : kRuleNames)
    if (info.name == name) return info.kind;
  return std::nullopt;
}

std::vector<RuleKind> schema_rules() {
  std::vector<RuleKind> out;
  for (std::size_t i = 0; i < kSchemaRuleCount; ++i) out.push_back(static_cast<RuleKind>(i));
  return out;
}

bool is_intro(RuleKind k) {
  switch (k) {
    case RuleKind::PlusAndI:
    case RuleKind::MinusAndI1:
    case RuleKind::MinusAndI2:
    case RuleKind::PlusOrI1:
    case RuleKind::PlusOrI2:
    case RuleKind::MinusOrI:
    case RuleKind::PlusNegI:
    case RuleKind::MinusNegI:
    case RuleKind::PlusImpI:
    case RuleKind::MinusImpI:
      return true;
    default:
      return false;
  }
}

bool is_elim(RuleKind k) {
  return static_cast<std::size_t>(k) < kLogicalRuleCount && !is_intro(k);
}

std::size_t discharge_slot_count(RuleKind k) {
  switch (k) {
    case RuleKind::PlusImpI:
    case RuleKind::Raa:
      return 1;
    case RuleKind::PlusOrE:
    case RuleKind::MinusAndE:
      return 2;
    default:
      return 0;
  }
}

std::size_t discharge_premise(RuleKind k, std::size_t slot) {
  switch (k) {
    case RuleKind::PlusImpI:
    case RuleKind::Raa:
      return 0;
    case RuleKind::PlusOrE:
    case RuleKind::MinusAndE:
      return slot + 1;
    default:
      throw std::logic_error("rule has no discharge slots");
  }
}

std::string format_path(const Path& p) {
  if (p.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

Derivation Derivation::build(Node n) {
  n.size = 1;
  n.hash = mix(static_cast<std::size_t>(n.kind), n.basic_index);
  n.hash = mix(n.hash, std::hash<std::string>{}(n.label));
  n.hash = mix(n.hash, hash_value(n.conclusion));
  for (const auto& l : n.discharges) n.hash = mix(n.hash, std::hash<std::string>{}(l));
  for (const auto& p : n.premises) {
    n.size += p.size();
    n.hash = mix(n.hash, p.hash());
  }
  return Derivation(std::make_shared<const Node>(std::move(n)));
}

Derivation Derivation::assume(std::string label, Statement s) {
  Node n;
  n.kind = RuleKind::Assume;
  n.label = std::move(label);
  n.conclusion = Judgement(std::move(s));
  return build(std::move(n));
}

Derivation Derivation::basic(std::size_t rule_index, Statement conclusion, std::vector<Derivation> premises) {
  Node n;
  n.kind = RuleKind::Basic;
  n.basic_index = rule_index;
  n.conclusion = Judgement(std::move(conclusion));
  n.premises = std::move(premises);
  return build(std::move(n));
}

Derivation Derivation::axiom(Statement conclusion) {
  Node n;
  n.kind = RuleKind::Axiom;
  n.conclusion = Judgement(std::move(conclusion));
  return build(std::move(n));
}

Derivation Derivation::make(RuleKind kind, Judgement conclusion, std::vector<Derivation> premises,
                            std::vector<std::string> discharges) {
  if (kind == RuleKind::Assume || kind == RuleKind::Basic)
    throw std::invalid_argument("use Derivation::assume / Derivation::basic");
  Node n;
  n.kind = kind;
  n.conclusion = std::move(conclusion);
  n.premises = std::move(premises);
  n.discharges = std::move(discharges);
  return build(std::move(n));
}

Derivation Derivation::with_premises(std::vector<Derivation> premises) const {
  Node n = *node_;
  n.premises = std::move(premises);
  return build(std::move(n));
}

Derivation Derivation::with_discharges(std::vector<std::string> discharges) const {
  Node n = *node_;
  n.discharges = std::move(discharges);
  return build(std::move(n));
}

std::optional<std::string> Derivation::binder_for_premise(std::size_t i) const {
  std::size_t slots = discharge_slot_count(kind());
  for (std::size_t s = 0; s < slots && s < discharges().size(); ++s)
    if (discharge_premise(kind(), s) == i) return discharges()[s];
  return std::nullopt;
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.basic_index() <=> b.basic_index(); c != 0) return c;
  if (auto c = a.label() <=> b.label(); c != 0) return c;
  if (auto c = a.conclusion() <=> b.conclusion(); c != 0) return c;
  if (auto c = a.discharges() <=> b.discharges(); c != 0) return c;
  const auto& ap = a.premises();
  const auto& bp = b.premises();
  if (auto c = ap.size() <=> bp.size(); c != 0) return c;
  for (std::size_t i = 0; i < ap.size(); ++i)
    if (auto c = ap[i] <=> bp[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t size(const Derivation& d) { return d.size(); }

const Derivation& subderivation(const Derivation& d, const Path& p) {
  const Derivation* cur = &d;
  for (std::size_t i : p) {
    if (i >= cur->premises().size()) throw std::out_of_range("path " + format_path(p) + " leaves the tree");
    cur = &cur->premises()[i];
  }
  return *cur;
}

namespace {

Derivation replace_rec(const Derivation& d, const Path& p, std::size_t depth, Derivation& replacement) {
  if (depth == p.size()) return std::move(replacement);
  if (p[depth] >= d.premises().size()) throw std::out_of_range("path " + format_path(p) + " leaves the tree");
  auto premises = d.premises();
  premises[p[depth]] = replace_rec(premises[p[depth]], p, depth + 1, replacement);
  return d.with_premises(std::move(premises));
}

void open_rec(const Derivation& d, std::vector<std::string>& bound, std::vector<OpenAssumption>& out) {
  if (d.is_assumption()) {
    if (std::find(bound.begin(), bound.end(), d.label()) == bound.end())
      out.push_back({d.label(), d.conclusion().statement()});
    return;
  }
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    auto binder = d.binder_for_premise(i);
    if (binder) bound.push_back(*binder);
    open_rec(d.premises()[i], bound, out);
    if (binder) bound.pop_back();
  }
}

void labels_rec(const Derivation& d, std::set<std::string>& out) {
  if (d.is_assumption()) out.insert(d.label());
  for (const auto& l : d.discharges()) out.insert(l);
  for (const auto& p : d.premises()) labels_rec(p, out);
}

bool occurs_free(const Derivation& d, const std::string& label) {
  if (d.is_assumption()) return d.label() == label;
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    auto binder = d.binder_for_premise(i);
    if (binder && *binder == label) continue;
    if (occurs_free(d.premises()[i], label)) return true;
  }
  return false;
}

// Renames every binder of `d` that is already in `used`; records all binder
// labels in `used`.
Derivation freshen_binders(const Derivation& d, std::set<std::string>& used) {
  if (d.premises().empty()) return d;
  bool changed = false;
  auto premises = d.premises();
  auto discharges = d.discharges();
  for (std::size_t i = 0; i < premises.size(); ++i) {
    for (std::size_t s = 0; s < discharges.size(); ++s) {
      if (discharge_premise(d.kind(), s) != i) continue;
      const std::string old = discharges[s];
      if (used.count(old)) {
        std::string next = fresh_label(used);
        premises[i] = rename_free(premises[i], old, next);
        discharges[s] = next;
        changed = true;
      }
      used.insert(discharges[s]);
    }
    Derivation child = freshen_binders(premises[i], used);
    if (!(child == premises[i])) {
      premises[i] = std::move(child);
      changed = true;
    }
  }
  if (!changed) return d;
  return d.with_premises(std::move(premises)).with_discharges(std::move(discharges));
}

Derivation subst_rec(const Derivation& d, const std::map<std::string, const Derivation*>& active,
                     const std::set<std::string>& image_free, std::set<std::string>& used) {
  if (active.empty()) return d;
  if (d.is_assumption()) {
    auto it = active.find(d.label());
    if (it == active.end()) return d;
    return freshen_binders(*it->second, used);
  }
  bool changed = false;
  auto premises = d.premises();
  auto discharges = d.discharges();
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const std::map<std::string, const Derivation*>* child_active = &active;
    std::map<std::string, const Derivation*> narrowed;
    for (std::size_t s = 0; s < discharges.size(); ++s) {
      if (discharge_premise(d.kind(), s) != i) continue;
      const std::string& u = discharges[s];
      if (active.count(u)) {
        narrowed = active;
        narrowed.erase(u);
        child_active = &narrowed;
      }
      if (image_free.count(u)) {
        std::string next = fresh_label(used);
        used.insert(next);
        premises[i] = rename_free(premises[i], u, next);
        discharges[s] = next;
        changed = true;
      }
    }
    Derivation child = subst_rec(premises[i], *child_active, image_free, used);
    if (!(child == premises[i])) {
      premises[i] = std::move(child);
      changed = true;
    }
  }
  if (!changed) return d;
  return d.with_premises(std::move(premises)).with_discharges(std::move(discharges));
}

}  // namespace

Derivation replace_at(const Derivation& d, const Path& p, Derivation replacement) {
  return replace_rec(d, p, 0, replacement);
}

std::vector<OpenAssumption> open_assumptions(const Derivation& d) {
  std::vector<std::string> bound;
  std::vector<OpenAssumption> out;
  open_rec(d, bound, out);
  return out;
}

std::set<std::string> free_labels(const Derivation& d) {
  std::set<std::string> out;
  for (const auto& a : open_assumptions(d)) out.insert(a.label);
  return out;
}

std::set<std::string> all_labels(const Derivation& d) {
  std::set<std::string> out;
  labels_rec(d, out);
  return out;
}

bool is_closed(const Derivation& d) { return open_assumptions(d).empty(); }

std::string fresh_label(const std::set<std::string>& used, std::string_view prefix) {
  for (std::size_t k = 0;; ++k) {
    std::string candidate = std::string(prefix) + std::to_string(k);
    if (!used.count(candidate)) return candidate;
  }
}

Derivation rename_free(const Derivation& d, const std::string& from, const std::string& to) {
  if (from == to) return d;
  if (d.is_assumption()) {
    if (d.label() != from) return d;
    return Derivation::assume(to, d.conclusion().statement());
  }
  bool changed = false;
  auto premises = d.premises();
  for (std::size_t i = 0; i < premises.size(); ++i) {
    auto binder = d.binder_for_premise(i);
    if (binder && *binder == from) continue;
    Derivation child = rename_free(premises[i], from, to);
    if (!(child == premises[i])) {
      premises[i] = std::move(child);
      changed = true;
    }
  }
  return changed ? d.with_premises(std::move(premises)) : d;
}

Derivation substitute_open(const Derivation& d, const Bindings& bindings, std::set<std::string>& used) {
  std::map<std::string, const Derivation*> active;
  std::set<std::string> image_free;
  for (const auto& [label, image] : bindings) {
    active.emplace(label, &image);
    for (const auto& l : free_labels(image)) image_free.insert(l);
  }
  used.insert(image_free.begin(), image_free.end());
  return subst_rec(d, active, image_free, used);
}

Derivation substitute(const Derivation& d, const Bindings& bindings) {
  if (bindings.empty()) return d;
  auto open = open_assumptions(d);
  auto labels = all_labels(d);
  for (const auto& [label, image] : bindings) {
    if (!is_closed(image)) throw SubstitutionError("binding for '" + label + "' is not a closed derivation");
    bool found = false;
    for (const auto& a : open) {
      if (a.label != label) continue;
      found = true;
      if (image.conclusion() != Judgement(a.statement))
        throw SubstitutionError("binding for '" + label + "' concludes " + print_judgement(image.conclusion()) +
                                " but the assumption is " + print_statement(a.statement));
    }
    if (!found && labels.count(label))
      throw SubstitutionError("binding targets discharged label '" + label + "'");
  }
  std::set<std::string> used = labels;
  return substitute_open(d, bindings, used);
}

namespace {

bool matches_prefix_number(const std::string& label, const std::string& prefix) {
  if (label.size() <= prefix.size() || label.compare(0, prefix.size(), prefix) != 0) return false;
  for (std::size_t i = prefix.size(); i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return false;
  return true;
}

std::string binder_prefix(const std::set<std::string>& free) {
  std::string prefix = "u";
  for (;;) {
    bool clash = false;
    for (const auto& l : free)
      if (matches_prefix_number(l, prefix)) clash = true;
    if (!clash) return prefix;
    prefix += "_";
  }
}

Derivation canon_rec(const Derivation& d, const std::string& prefix, std::size_t depth,
                     std::vector<std::pair<std::string, std::string>>& scope,
                     const std::map<std::string, std::string>& free_map) {
  if (d.is_assumption()) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == d.label()) {
        if (it->second == d.label()) return d;
        return Derivation::assume(it->second, d.conclusion().statement());
      }
    auto f = free_map.find(d.label());
    if (f == free_map.end() || f->second == d.label()) return d;
    return Derivation::assume(f->second, d.conclusion().statement());
  }
  if (d.premises().empty()) return d;
  auto premises = d.premises();
  auto discharges = d.discharges();
  bool changed = false;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    std::size_t pushed = 0;
    std::size_t child_depth = depth;
    for (std::size_t s = 0; s < discharges.size(); ++s) {
      if (discharge_premise(d.kind(), s) != i) continue;
      std::string name = prefix + std::to_string(child_depth++);
      scope.emplace_back(discharges[s], name);
      ++pushed;
      if (discharges[s] != name) {
        discharges[s] = name;
        changed = true;
      }
    }
    Derivation child = canon_rec(premises[i], prefix, child_depth, scope, free_map);
    scope.resize(scope.size() - pushed);
    if (!(child == premises[i])) {
      premises[i] = std::move(child);
      changed = true;
    }
  }
  if (!changed) return d;
  return d.with_premises(std::move(premises)).with_discharges(std::move(discharges));
}

}  // namespace

Derivation canonicalize_binders(const Derivation& d) {
  auto free = free_labels(d);
  std::vector<std::pair<std::string, std::string>> scope;
  return canon_rec(d, binder_prefix(free), 0, scope, {});
}

Derivation canonicalize(const Derivation& d) {
  std::map<std::string, std::string> free_map;
  for (const auto& a : open_assumptions(d)) {
    if (!free_map.count(a.label)) {
      std::string name = "x" + std::to_string(free_map.size());
      free_map.emplace(a.label, name);
    }
  }
  std::vector<std::pair<std::string, std::string>> scope;
  return canon_rec(d, "u", 0, scope, free_map);
}

bool alpha_equivalent(const Derivation& a, const Derivation& b) {
  return canonicalize_binders(a) == canonicalize_binders(b);
}

}  // namespace bilat
