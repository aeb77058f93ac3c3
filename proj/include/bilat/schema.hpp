#ifndef BILAT_SCHEMA_HPP
#define BILAT_SCHEMA_HPP

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "bilat/derivation.hpp"
#include "bilat/syntax.hpp"

namespace bilat {

// Propositional metavariables of the rule schemas.
enum class Meta { A, B };

class PropPattern {
 public:
  static PropPattern meta(Meta m);
  static PropPattern neg(PropPattern inner);
  static PropPattern binary(Connective c, PropPattern left, PropPattern right);

  bool is_meta() const { return node_->is_meta; }
  Meta meta_var() const { return node_->meta; }
  Connective connective() const { return node_->connective; }
  const PropPattern& child(std::size_t i) const { return node_->children[i]; }

 private:
  struct Node {
    bool is_meta = false;
    Meta meta = Meta::A;
    Connective connective = Connective::Atom;
    std::vector<PropPattern> children;
  };
  explicit PropPattern(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct JudgementPattern {
  enum class Kind { Signed, Alpha, AlphaConjugate, Falsum };
  Kind kind = Kind::Falsum;
  Sign sign = Sign::Plus;
  std::optional<PropPattern> prop;

  static JudgementPattern plus(PropPattern p) { return {Kind::Signed, Sign::Plus, std::move(p)}; }
  static JudgementPattern minus(PropPattern p) { return {Kind::Signed, Sign::Minus, std::move(p)}; }
  static JudgementPattern alpha() { return {Kind::Alpha, Sign::Plus, std::nullopt}; }
  static JudgementPattern alpha_conjugate() { return {Kind::AlphaConjugate, Sign::Plus, std::nullopt}; }
  static JudgementPattern falsum() { return {Kind::Falsum, Sign::Plus, std::nullopt}; }
};

struct MetaBindings {
  std::optional<Prop> a;
  std::optional<Prop> b;
  std::optional<Statement> alpha;
};

struct PremiseSchema {
  JudgementPattern judgement;
  std::optional<JudgementPattern> discharge;
};

struct RuleSchema {
  RuleKind kind;
  std::vector<PremiseSchema> premises;
  JudgementPattern conclusion;
  // The falsum rule accepts its two premises in either order.
  bool unordered_premises = false;
};

bool match(const JudgementPattern& pat, const Judgement& j, MetaBindings& env);
bool match_prop(const PropPattern& pat, const Prop& p, MetaBindings& env);
// Instantiates a pattern; nullopt when a metavariable it needs is unbound.
std::optional<Judgement> instantiate(const JudgementPattern& pat, const MetaBindings& env);
bool mentions_meta(const JudgementPattern& pat, Meta m);
bool mentions_alpha(const JudgementPattern& pat);

// Schemas for the 21 logical rules plus the falsum and RAA rules, indexed by
// RuleKind. Tests build altered tables to inject faults.
class RuleTable {
 public:
  const RuleSchema& schema(RuleKind k) const;
  RuleSchema& mutable_schema(RuleKind k);
  const std::array<RuleSchema, kSchemaRuleCount>& schemas() const { return schemas_; }

  static const RuleTable& standard();
  static RuleTable make_standard();

 private:
  RuleTable() = default;
  std::array<RuleSchema, kSchemaRuleCount> schemas_;
};

}  // namespace bilat

#endif  // BILAT_SCHEMA_HPP
