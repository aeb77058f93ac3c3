#ifndef BILAT_DERIVATION_HPP
#define BILAT_DERIVATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilat/syntax.hpp"

namespace bilat {

// Rule schemas of the signed calculus. The first block lists the logical
// rules, then the two coordination rules, then basic-system rules and
// assumption leaves.
enum class RuleKind : std::uint8_t {
  PlusAndI,
  PlusAndE1,
  PlusAndE2,
  MinusAndI1,
  MinusAndI2,
  MinusAndE,
  PlusOrI1,
  PlusOrI2,
  PlusOrE,
  MinusOrI,
  MinusOrE1,
  MinusOrE2,
  PlusNegI,
  PlusNegE,
  MinusNegI,
  MinusNegE,
  PlusImpI,
  PlusImpE,
  MinusImpI,
  MinusImpE1,
  MinusImpE2,
  Falsum,
  Raa,
  Basic,   // positive rule of the basic system, indexed
  Axiom,   // negative axiom -b of the basic system
  Assume,  // labelled assumption leaf
};

inline constexpr std::size_t kLogicalRuleCount = 21;
inline constexpr std::size_t kSchemaRuleCount = 23;  // logical + falsum + raa

std::string_view rule_name(RuleKind k);
std::optional<RuleKind> rule_from_name(std::string_view name);
std::vector<RuleKind> schema_rules();

bool is_intro(RuleKind k);
bool is_elim(RuleKind k);

// Index of the premise that slot `slot` of a discharging rule binds into.
std::size_t discharge_premise(RuleKind k, std::size_t slot);
std::size_t discharge_slot_count(RuleKind k);

using Path = std::vector<std::size_t>;
std::string format_path(const Path& p);

class Derivation {
 public:
  static Derivation assume(std::string label, Statement s);
  static Derivation basic(std::size_t rule_index, Statement conclusion, std::vector<Derivation> premises);
  static Derivation axiom(Statement conclusion);
  static Derivation make(RuleKind kind, Judgement conclusion, std::vector<Derivation> premises,
                         std::vector<std::string> discharges = {});

  RuleKind kind() const { return node_->kind; }
  std::size_t basic_index() const { return node_->basic_index; }
  const std::string& label() const { return node_->label; }
  const Judgement& conclusion() const { return node_->conclusion; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }
  const std::vector<std::string>& discharges() const { return node_->discharges; }

  bool is_assumption() const { return node_->kind == RuleKind::Assume; }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  Derivation with_premises(std::vector<Derivation> premises) const;
  Derivation with_discharges(std::vector<std::string> discharges) const;

  // Label bound by a node for premise `i`, if any.
  std::optional<std::string> binder_for_premise(std::size_t i) const;

  friend bool operator==(const Derivation& a, const Derivation& b);
  friend std::strong_ordering operator<=>(const Derivation& a, const Derivation& b);

 private:
  struct Node {
    RuleKind kind;
    std::size_t basic_index = 0;
    std::string label;
    Judgement conclusion = Judgement::falsum();
    std::vector<std::string> discharges;
    std::vector<Derivation> premises;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Derivation build(Node n);

  std::shared_ptr<const Node> node_;
};

struct DerivationHash {
  std::size_t operator()(const Derivation& d) const { return d.hash(); }
};

std::size_t size(const Derivation& d);

const Derivation& subderivation(const Derivation& d, const Path& p);
Derivation replace_at(const Derivation& d, const Path& p, Derivation replacement);

struct OpenAssumption {
  std::string label;
  Statement statement;
  friend bool operator==(const OpenAssumption&, const OpenAssumption&) = default;
  friend auto operator<=>(const OpenAssumption&, const OpenAssumption&) = default;
};

// Multiset of assumption leaves not bound by an enclosing discharge, in
// pre-order.
std::vector<OpenAssumption> open_assumptions(const Derivation& d);
std::set<std::string> free_labels(const Derivation& d);
std::set<std::string> all_labels(const Derivation& d);
bool is_closed(const Derivation& d);

std::string fresh_label(const std::set<std::string>& used, std::string_view prefix = "v");

class SubstitutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Bindings = std::map<std::string, Derivation>;

// Replaces open assumption leaves by closed derivations. Bound labels of the
// inserted copies are renamed where they would collide.
Derivation substitute(const Derivation& d, const Bindings& bindings);

// Capture-avoiding substitution that also admits open replacements. `used`
// holds every label that inserted binders must avoid and grows as labels are
// allocated.
Derivation substitute_open(const Derivation& d, const Bindings& bindings, std::set<std::string>& used);

// Renames free occurrences of `from` to `to`.
Derivation rename_free(const Derivation& d, const std::string& from, const std::string& to);

// Alpha-normal form: binders renamed by scope depth, free labels kept.
Derivation canonicalize_binders(const Derivation& d);
// As above, and free labels renamed x0, x1, ... by first occurrence.
Derivation canonicalize(const Derivation& d);
bool alpha_equivalent(const Derivation& a, const Derivation& b);

}  // namespace bilat

#endif  // BILAT_DERIVATION_HPP
