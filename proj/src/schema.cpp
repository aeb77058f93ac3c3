#include "bilat/schema.hpp"

namespace bilat {

PropPattern PropPattern::meta(Meta m) {
  auto n = std::make_shared<Node>();
  n->is_meta = true;
  n->meta = m;
  return PropPattern(std::move(n));
}

PropPattern PropPattern::neg(PropPattern inner) {
  auto n = std::make_shared<Node>();
  n->connective = Connective::Not;
  n->children.push_back(std::move(inner));
  return PropPattern(std::move(n));
}

PropPattern PropPattern::binary(Connective c, PropPattern left, PropPattern right) {
  auto n = std::make_shared<Node>();
  n->connective = c;
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  return PropPattern(std::move(n));
}

bool match_prop(const PropPattern& pat, const Prop& p, MetaBindings& env) {
  if (pat.is_meta()) {
    auto& slot = pat.meta_var() == Meta::A ? env.a : env.b;
    if (slot) return *slot == p;
    slot = p;
    return true;
  }
  if (p.kind() != pat.connective()) return false;
  if (pat.connective() == Connective::Not) return match_prop(pat.child(0), p.inner(), env);
  return match_prop(pat.child(0), p.left(), env) && match_prop(pat.child(1), p.right(), env);
}

bool match(const JudgementPattern& pat, const Judgement& j, MetaBindings& env) {
  using K = JudgementPattern::Kind;
  switch (pat.kind) {
    case K::Falsum:
      return j.is_falsum();
    case K::Signed:
      return !j.is_falsum() && j.statement().sign == pat.sign && match_prop(*pat.prop, j.statement().prop, env);
    case K::Alpha:
    case K::AlphaConjugate: {
      if (j.is_falsum()) return false;
      Statement s = pat.kind == K::Alpha ? j.statement() : conjugate(j.statement());
      if (env.alpha) return *env.alpha == s;
      env.alpha = s;
      return true;
    }
  }
  return false;
}

namespace {

std::optional<Prop> instantiate_prop(const PropPattern& pat, const MetaBindings& env) {
  if (pat.is_meta()) return pat.meta_var() == Meta::A ? env.a : env.b;
  if (pat.connective() == Connective::Not) {
    auto inner = instantiate_prop(pat.child(0), env);
    if (!inner) return std::nullopt;
    return Prop::neg(*inner);
  }
  auto l = instantiate_prop(pat.child(0), env);
  auto r = instantiate_prop(pat.child(1), env);
  if (!l || !r) return std::nullopt;
  return Prop::binary(pat.connective(), *l, *r);
}

bool prop_mentions(const PropPattern& pat, Meta m) {
  if (pat.is_meta()) return pat.meta_var() == m;
  for (std::size_t i = 0; i < (pat.connective() == Connective::Not ? 1u : 2u); ++i)
    if (prop_mentions(pat.child(i), m)) return true;
  return false;
}

}  // namespace

std::optional<Judgement> instantiate(const JudgementPattern& pat, const MetaBindings& env) {
  using K = JudgementPattern::Kind;
  switch (pat.kind) {
    case K::Falsum:
      return Judgement::falsum();
    case K::Signed: {
      auto p = instantiate_prop(*pat.prop, env);
      if (!p) return std::nullopt;
      return Judgement(Statement{pat.sign, *p});
    }
    case K::Alpha:
      if (!env.alpha) return std::nullopt;
      return Judgement(*env.alpha);
    case K::AlphaConjugate:
      if (!env.alpha) return std::nullopt;
      return Judgement(conjugate(*env.alpha));
  }
  return std::nullopt;
}

bool mentions_meta(const JudgementPattern& pat, Meta m) {
  return pat.kind == JudgementPattern::Kind::Signed && prop_mentions(*pat.prop, m);
}

bool mentions_alpha(const JudgementPattern& pat) {
  return pat.kind == JudgementPattern::Kind::Alpha || pat.kind == JudgementPattern::Kind::AlphaConjugate;
}

const RuleSchema& RuleTable::schema(RuleKind k) const {
  auto i = static_cast<std::size_t>(k);
  if (i >= kSchemaRuleCount) throw std::out_of_range("rule has no schema");
  return schemas_[i];
}

RuleSchema& RuleTable::mutable_schema(RuleKind k) {
  auto i = static_cast<std::size_t>(k);
  if (i >= kSchemaRuleCount) throw std::out_of_range("rule has no schema");
  return schemas_[i];
}

RuleTable RuleTable::make_standard() {
  using JP = JudgementPattern;
  const auto A = PropPattern::meta(Meta::A);
  const auto B = PropPattern::meta(Meta::B);
  const auto AandB = PropPattern::binary(Connective::And, A, B);
  const auto AorB = PropPattern::binary(Connective::Or, A, B);
  const auto AimpB = PropPattern::binary(Connective::Imp, A, B);
  const auto notA = PropPattern::neg(A);
  auto p = [](JP j) { return PremiseSchema{std::move(j), std::nullopt}; };
  auto pd = [](JP j, JP d) { return PremiseSchema{std::move(j), std::move(d)}; };

  RuleTable t;
  auto set = [&](RuleKind k, std::vector<PremiseSchema> premises, JP conclusion) {
    t.schemas_[static_cast<std::size_t>(k)] = RuleSchema{k, std::move(premises), std::move(conclusion), false};
  };
  using R = RuleKind;
  set(R::PlusAndI, {p(JP::plus(A)), p(JP::plus(B))}, JP::plus(AandB));
  set(R::PlusAndE1, {p(JP::plus(AandB))}, JP::plus(A));
  set(R::PlusAndE2, {p(JP::plus(AandB))}, JP::plus(B));
  set(R::MinusAndI1, {p(JP::minus(A))}, JP::minus(AandB));
  set(R::MinusAndI2, {p(JP::minus(B))}, JP::minus(AandB));
  set(R::MinusAndE, {p(JP::minus(AandB)), pd(JP::alpha(), JP::minus(A)), pd(JP::alpha(), JP::minus(B))},
      JP::alpha());
  set(R::PlusOrI1, {p(JP::plus(A))}, JP::plus(AorB));
  set(R::PlusOrI2, {p(JP::plus(B))}, JP::plus(AorB));
  set(R::PlusOrE, {p(JP::plus(AorB)), pd(JP::alpha(), JP::plus(A)), pd(JP::alpha(), JP::plus(B))}, JP::alpha());
  set(R::MinusOrI, {p(JP::minus(A)), p(JP::minus(B))}, JP::minus(AorB));
  set(R::MinusOrE1, {p(JP::minus(AorB))}, JP::minus(A));
  set(R::MinusOrE2, {p(JP::minus(AorB))}, JP::minus(B));
  set(R::PlusNegI, {p(JP::minus(A))}, JP::plus(notA));
  set(R::PlusNegE, {p(JP::plus(notA))}, JP::minus(A));
  set(R::MinusNegI, {p(JP::plus(A))}, JP::minus(notA));
  set(R::MinusNegE, {p(JP::minus(notA))}, JP::plus(A));
  set(R::PlusImpI, {pd(JP::plus(B), JP::plus(A))}, JP::plus(AimpB));
  set(R::PlusImpE, {p(JP::plus(AimpB)), p(JP::plus(A))}, JP::plus(B));
  set(R::MinusImpI, {p(JP::plus(A)), p(JP::minus(B))}, JP::minus(AimpB));
  set(R::MinusImpE1, {p(JP::minus(AimpB))}, JP::plus(A));
  set(R::MinusImpE2, {p(JP::minus(AimpB))}, JP::minus(B));
  set(R::Falsum, {p(JP::plus(A)), p(JP::minus(A))}, JP::falsum());
  t.schemas_[static_cast<std::size_t>(R::Falsum)].unordered_premises = true;
  set(R::Raa, {pd(JP::falsum(), JP::alpha())}, JP::alpha_conjugate());
  return t;
}

const RuleTable& RuleTable::standard() {
  static const RuleTable table = make_standard();
  return table;
}

}  // namespace bilat
