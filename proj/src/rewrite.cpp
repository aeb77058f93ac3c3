#include "bilat/rewrite.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "bilat/deriv_format.hpp"

namespace bilat {

namespace {

using R = RuleKind;
using K = RedexKind;

constexpr std::array<RedexKindInfo, kRedexKindCount> kInfo = {{
    {K::BotRaaCut, "BotRaaCut", false, false},
    {K::DetourMinusImpE1, "DetourMinusImpE1", false, false},
    {K::DetourMinusImpE2, "DetourMinusImpE2", false, false},
    {K::DetourMinusOrE1, "DetourMinusOrE1", false, false},
    {K::DetourMinusOrE2, "DetourMinusOrE2", true, false},
    {K::DetourMinusAndE_L, "DetourMinusAndE_L", false, false},
    {K::DetourMinusAndE_R, "DetourMinusAndE_R", true, false},
    {K::DetourMinusNegE, "DetourMinusNegE", false, false},
    {K::DetourPlusNegE, "DetourPlusNegE", true, false},
    {K::BotOverAndPair, "BotOverAndPair", false, false},
    {K::BotOverImpPair, "BotOverImpPair", false, false},
    {K::BotOverOrPair, "BotOverOrPair", true, false},
    {K::BotOverNegPair, "BotOverNegPair", true, false},
    {K::RaaPermute_PlusAndE1, "RaaPermute_PlusAndE1", false, false},
    {K::RaaPermute_PlusAndE2, "RaaPermute_PlusAndE2", true, false},
    {K::RaaPermute_MinusOrE1, "RaaPermute_MinusOrE1", false, false},
    {K::RaaPermute_MinusOrE2, "RaaPermute_MinusOrE2", true, false},
    {K::RaaPermute_MinusNegE, "RaaPermute_MinusNegE", false, false},
    {K::RaaPermute_PlusNegE, "RaaPermute_PlusNegE", true, false},
    {K::RaaPermute_MinusAndE, "RaaPermute_MinusAndE", false, false},
    {K::RaaPermute_PlusOrE, "RaaPermute_PlusOrE", false, false},
    {K::RaaPermute_PlusImpE, "RaaPermute_PlusImpE", false, false},
    {K::RaaPermute_MinusImpE1, "RaaPermute_MinusImpE1", false, false},
    {K::RaaPermute_MinusImpE2, "RaaPermute_MinusImpE2", false, false},
    {K::DetourPlusAndE1, "DetourPlusAndE1", false, true},
    {K::DetourPlusAndE2, "DetourPlusAndE2", false, true},
    {K::DetourPlusOrE1, "DetourPlusOrE1", false, true},
    {K::DetourPlusOrE2, "DetourPlusOrE2", false, true},
    {K::DetourPlusImpE, "DetourPlusImpE", false, true},
}};

bool is(const Derivation& d, RuleKind k) { return d.kind() == k; }
bool major_is(const Derivation& d, RuleKind k) { return !d.premises().empty() && is(d.premise(0), k); }

const Statement& stmt(const Derivation& d) { return d.conclusion().statement(); }

// Index of the premise of a falsum node that carries the given rule, if any.
std::optional<std::size_t> side_with(const Derivation& d, RuleKind k) {
  if (is(d.premise(0), k)) return 0;
  if (is(d.premise(1), k)) return 1;
  return std::nullopt;
}

struct Pair {
  std::size_t plus_side;
  const Derivation& plus;
  const Derivation& minus;
};

std::optional<Pair> falsum_pair(const Derivation& d, RuleKind plus_rule, std::initializer_list<RuleKind> minus_rules) {
  auto side = side_with(d, plus_rule);
  if (!side) return std::nullopt;
  const Derivation& other = d.premise(1 - *side);
  for (RuleKind m : minus_rules)
    if (is(other, m)) return Pair{*side, d.premise(*side), other};
  return std::nullopt;
}

bool matches(K kind, const Derivation& d, const ReductionOptions& opts) {
  const auto& info = kInfo[static_cast<std::size_t>(kind)];
  if (opts.literal && (info.mirror || info.extension)) return false;
  switch (kind) {
    case K::BotRaaCut:
      return is(d, R::Falsum) && (is(d.premise(0), R::Raa) || is(d.premise(1), R::Raa));
    case K::DetourMinusImpE1:
      return is(d, R::MinusImpE1) && major_is(d, R::MinusImpI);
    case K::DetourMinusImpE2:
      return is(d, R::MinusImpE2) && major_is(d, R::MinusImpI);
    case K::DetourMinusOrE1:
      return is(d, R::MinusOrE1) && major_is(d, R::MinusOrI);
    case K::DetourMinusOrE2:
      return is(d, R::MinusOrE2) && major_is(d, R::MinusOrI);
    case K::DetourMinusAndE_L:
      return is(d, R::MinusAndE) && major_is(d, R::MinusAndI1);
    case K::DetourMinusAndE_R:
      return is(d, R::MinusAndE) && major_is(d, R::MinusAndI2);
    case K::DetourMinusNegE:
      return is(d, R::MinusNegE) && major_is(d, R::MinusNegI);
    case K::DetourPlusNegE:
      return is(d, R::PlusNegE) && major_is(d, R::PlusNegI);
    case K::BotOverAndPair: {
      if (!is(d, R::Falsum)) return false;
      auto p = falsum_pair(d, R::PlusAndI, {R::MinusAndI1, R::MinusAndI2});
      if (!p) return false;
      return !opts.literal || (p->plus_side == 0 && is(p->minus, R::MinusAndI1));
    }
    case K::BotOverImpPair: {
      if (!is(d, R::Falsum)) return false;
      auto p = falsum_pair(d, R::PlusImpI, {R::MinusImpI});
      return p && (!opts.literal || p->plus_side == 0);
    }
    case K::BotOverOrPair:
      return is(d, R::Falsum) && (falsum_pair(d, R::PlusOrI1, {R::MinusOrI}) || falsum_pair(d, R::PlusOrI2, {R::MinusOrI}));
    case K::BotOverNegPair:
      return is(d, R::Falsum) && falsum_pair(d, R::PlusNegI, {R::MinusNegI}).has_value();
    case K::RaaPermute_PlusAndE1:
      return is(d, R::PlusAndE1) && major_is(d, R::Raa);
    case K::RaaPermute_PlusAndE2:
      return is(d, R::PlusAndE2) && major_is(d, R::Raa);
    case K::RaaPermute_MinusOrE1:
      return is(d, R::MinusOrE1) && major_is(d, R::Raa);
    case K::RaaPermute_MinusOrE2:
      return is(d, R::MinusOrE2) && major_is(d, R::Raa);
    case K::RaaPermute_MinusNegE:
      return is(d, R::MinusNegE) && major_is(d, R::Raa);
    case K::RaaPermute_PlusNegE:
      return is(d, R::PlusNegE) && major_is(d, R::Raa);
    case K::RaaPermute_MinusAndE:
      return is(d, R::MinusAndE) && major_is(d, R::Raa);
    case K::RaaPermute_PlusOrE:
      return is(d, R::PlusOrE) && major_is(d, R::Raa);
    case K::RaaPermute_PlusImpE:
      return is(d, R::PlusImpE) && major_is(d, R::Raa);
    case K::RaaPermute_MinusImpE1:
      return is(d, R::MinusImpE1) && major_is(d, R::Raa);
    case K::RaaPermute_MinusImpE2:
      return is(d, R::MinusImpE2) && major_is(d, R::Raa);
    case K::DetourPlusAndE1:
      return is(d, R::PlusAndE1) && major_is(d, R::PlusAndI);
    case K::DetourPlusAndE2:
      return is(d, R::PlusAndE2) && major_is(d, R::PlusAndI);
    case K::DetourPlusOrE1:
      return is(d, R::PlusOrE) && major_is(d, R::PlusOrI1);
    case K::DetourPlusOrE2:
      return is(d, R::PlusOrE) && major_is(d, R::PlusOrI2);
    case K::DetourPlusImpE:
      return is(d, R::PlusImpE) && major_is(d, R::PlusImpI);
  }
  return false;
}

class Contractor {
 public:
  explicit Contractor(std::set<std::string> used) : used_(std::move(used)) {}

  Derivation run(K kind, const Derivation& d) {
    switch (kind) {
      case K::BotRaaCut: {
        std::size_t side = is(d.premise(0), R::Raa) ? 0 : 1;
        const Derivation& raa = d.premise(side);
        return subst(raa.premise(0), raa.discharges()[0], d.premise(1 - side));
      }
      case K::DetourMinusImpE1:
      case K::DetourMinusOrE1:
        return d.premise(0).premise(0);
      case K::DetourMinusImpE2:
      case K::DetourMinusOrE2:
        return d.premise(0).premise(1);
      case K::DetourMinusNegE:
      case K::DetourPlusNegE:
      case K::DetourPlusAndE1:
        return d.premise(0).premise(0);
      case K::DetourPlusAndE2:
        return d.premise(0).premise(1);
      case K::DetourMinusAndE_L:
      case K::DetourPlusOrE1:
        return subst(d.premise(1), d.discharges()[0], d.premise(0).premise(0));
      case K::DetourMinusAndE_R:
      case K::DetourPlusOrE2:
        return subst(d.premise(2), d.discharges()[1], d.premise(0).premise(0));
      case K::DetourPlusImpE:
        return subst(d.premise(0).premise(0), d.premise(0).discharges()[0], d.premise(1));
      case K::BotOverAndPair: {
        auto p = *falsum_pair(d, R::PlusAndI, {R::MinusAndI1, R::MinusAndI2});
        std::size_t component = is(p.minus, R::MinusAndI1) ? 0 : 1;
        return falsum_at(p.plus_side, p.plus.premise(component), p.minus.premise(0));
      }
      case K::BotOverImpPair: {
        auto p = *falsum_pair(d, R::PlusImpI, {R::MinusImpI});
        Derivation body = subst(p.plus.premise(0), p.plus.discharges()[0], p.minus.premise(0));
        return falsum_at(p.plus_side, body, p.minus.premise(1));
      }
      case K::BotOverOrPair: {
        auto first = falsum_pair(d, R::PlusOrI1, {R::MinusOrI});
        std::size_t component = first ? 0 : 1;
        Pair p = first ? *first : *falsum_pair(d, R::PlusOrI2, {R::MinusOrI});
        return falsum_at(p.plus_side, p.plus.premise(0), p.minus.premise(component));
      }
      case K::BotOverNegPair: {
        auto p = *falsum_pair(d, R::PlusNegI, {R::MinusNegI});
        // The +~A side becomes the +A side.
        return falsum_at(p.plus_side, p.minus.premise(0), p.plus.premise(0));
      }
      case K::RaaPermute_PlusAndE1:
        return permute_unary(d, R::MinusAndI1, conjugate(stmt(d)));
      case K::RaaPermute_PlusAndE2:
        return permute_unary(d, R::MinusAndI2, conjugate(stmt(d)));
      case K::RaaPermute_MinusOrE1:
        return permute_unary(d, R::PlusOrI1, conjugate(stmt(d)));
      case K::RaaPermute_MinusOrE2:
        return permute_unary(d, R::PlusOrI2, conjugate(stmt(d)));
      case K::RaaPermute_MinusNegE:
        return permute_unary(d, R::PlusNegI, conjugate(stmt(d)));
      case K::RaaPermute_PlusNegE:
        return permute_unary(d, R::MinusNegI, conjugate(stmt(d)));
      case K::RaaPermute_MinusAndE:
        return permute_case_split(d, R::PlusAndI);
      case K::RaaPermute_PlusOrE:
        return permute_case_split(d, R::MinusOrI);
      case K::RaaPermute_PlusImpE: {
        const Derivation& raa = d.premise(0);
        std::string v = fresh();
        Derivation image = Derivation::make(R::MinusImpI, conjugate(stmt(raa)),
                                            {d.premise(1), Derivation::assume(v, conjugate(stmt(d)))});
        return wrap(v, stmt(d), subst(raa.premise(0), raa.discharges()[0], image));
      }
      case K::RaaPermute_MinusImpE1: {
        // d : +A from -(A -> B)
        const Derivation& raa = d.premise(0);
        const Statement& imp = conjugate(stmt(raa));  // +(A -> B)
        Statement plus_a = Statement::plus(imp.prop.left());
        Statement minus_b = Statement::minus(imp.prop.right());
        std::string v = fresh(), w = fresh(), z = fresh();
        Derivation clash = Derivation::make(R::Falsum, Judgement::falsum(),
                                            {Derivation::assume(w, plus_a), Derivation::assume(v, conjugate(plus_a))});
        Derivation plus_b = Derivation::make(R::Raa, conjugate(minus_b), {clash}, {z});
        Derivation image = Derivation::make(R::PlusImpI, imp, {plus_b}, {w});
        return wrap(v, stmt(d), subst(raa.premise(0), raa.discharges()[0], image));
      }
      case K::RaaPermute_MinusImpE2: {
        // d : -B from -(A -> B)
        const Derivation& raa = d.premise(0);
        const Statement& imp = conjugate(stmt(raa));
        std::string v = fresh(), w = fresh();
        Derivation image =
            Derivation::make(R::PlusImpI, imp, {Derivation::assume(v, Statement::plus(imp.prop.right()))}, {w});
        return wrap(v, stmt(d), subst(raa.premise(0), raa.discharges()[0], image));
      }
    }
    throw std::logic_error("unhandled redex kind");
  }

 private:
  std::string fresh() {
    std::string l = fresh_label(used_);
    used_.insert(l);
    return l;
  }

  Derivation subst(const Derivation& target, const std::string& label, const Derivation& image) {
    return substitute_open(target, Bindings{{label, image}}, used_);
  }

  // RAA discharging the conjugate of `conclusion` under label `v`.
  static Derivation wrap(const std::string& v, const Statement& conclusion, Derivation body) {
    return Derivation::make(R::Raa, conclusion, {std::move(body)}, {v});
  }

  static Derivation falsum_at(std::size_t plus_side, Derivation plus, Derivation minus) {
    if (plus_side == 0) return Derivation::make(R::Falsum, Judgement::falsum(), {std::move(plus), std::move(minus)});
    return Derivation::make(R::Falsum, Judgement::falsum(), {std::move(minus), std::move(plus)});
  }

  // E(RAA_u(D1)) => RAA_v(D1[I(v)/u]) for single-premise eliminations; `hyp`
  // is the statement the new RAA discharges.
  Derivation permute_unary(const Derivation& d, RuleKind intro, const Statement& hyp) {
    const Derivation& raa = d.premise(0);
    std::string v = fresh();
    Derivation image = Derivation::make(intro, conjugate(stmt(raa)), {Derivation::assume(v, hyp)});
    return wrap(v, stmt(d), subst(raa.premise(0), raa.discharges()[0], image));
  }

  // Two-branch eliminations: each branch is closed off against the new
  // hypothesis and re-wrapped by RAA on its own discharged label.
  Derivation permute_case_split(const Derivation& d, RuleKind intro) {
    const Derivation& raa = d.premise(0);
    const Statement& alpha = stmt(d);
    std::string w = fresh();
    const Statement major = conjugate(stmt(raa));
    const Prop& left = major.prop.left();
    const Prop& right = major.prop.right();
    // Branch hypotheses are conjugates of the new introduction's premises.
    const Sign hyp_sign = intro == R::PlusAndI ? Sign::Minus : Sign::Plus;
    const Statement hyp_left{hyp_sign, left};
    const Statement hyp_right{hyp_sign, right};
    auto branch = [&](std::size_t i, const Statement& hyp) {
      Derivation clash = Derivation::make(R::Falsum, Judgement::falsum(),
                                          {d.premise(i), Derivation::assume(w, conjugate(alpha))});
      return Derivation::make(R::Raa, conjugate(hyp), {clash}, {d.discharges()[i - 1]});
    };
    Derivation image = Derivation::make(intro, major, {branch(1, hyp_left), branch(2, hyp_right)});
    return wrap(w, alpha, subst(raa.premise(0), raa.discharges()[0], image));
  }

  std::set<std::string> used_;
};

}  // namespace

const RedexKindInfo& redex_kind_info(RedexKind k) { return kInfo.at(static_cast<std::size_t>(k)); }

std::string_view redex_kind_name(RedexKind k) { return redex_kind_info(k).name; }

std::optional<RedexKind> redex_kind_from_name(std::string_view name) {
  for (const auto& info : kInfo)
    if (info.name == name) return info.kind;
  return std::nullopt;
}

std::vector<RedexKind> redex_kinds_at(const Derivation& node, const ReductionOptions& opts) {
  std::vector<RedexKind> out;
  if (node.premises().empty()) return out;
  for (const auto& info : kInfo)
    if (matches(info.kind, node, opts)) out.push_back(info.kind);
  return out;
}

namespace {

void find_rec(const Derivation& d, Path& path, const ReductionOptions& opts, std::vector<Redex>& out) {
  for (RedexKind k : redex_kinds_at(d, opts)) out.push_back({path, k});
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    path.push_back(i);
    find_rec(d.premise(i), path, opts, out);
    path.pop_back();
  }
}

bool is_proper_prefix(const Path& a, const Path& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

std::vector<Redex> find_redexes(const Derivation& d, const ReductionOptions& opts) {
  std::vector<Redex> out;
  Path path;
  find_rec(d, path, opts, out);
  return out;
}

bool is_normal(const Derivation& d, const ReductionOptions& opts) {
  if (!redex_kinds_at(d, opts).empty()) return false;
  for (const auto& p : d.premises())
    if (!is_normal(p, opts)) return false;
  return true;
}

Derivation reduce_at(const Derivation& d, const Redex& r, const ReductionOptions& opts) {
  const Derivation* node = nullptr;
  try {
    node = &subderivation(d, r.path);
  } catch (const std::out_of_range&) {
    throw RedexMismatch("no subderivation at " + format_path(r.path));
  }
  if (node->premises().empty() || !matches(r.kind, *node, opts))
    throw RedexMismatch(std::string(redex_kind_name(r.kind)) + " does not match at " + format_path(r.path));
  Contractor c(all_labels(d));
  return replace_at(d, r.path, c.run(r.kind, *node));
}

bool replay_trace(const Trace& t, const ReductionOptions& opts) {
  Derivation cur = t.initial;
  for (const auto& step : t.steps) {
    try {
      cur = reduce_at(cur, step.redex, opts);
    } catch (const RedexMismatch&) {
      return false;
    }
    if (!(cur == step.result)) return false;
  }
  return true;
}

std::string format_trace(const Trace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    out += std::to_string(i + 1) + " " + format_path(t.steps[i].redex.path) + " " +
           std::string(redex_kind_name(t.steps[i].redex.kind)) + "\n";
  out += print_derivation(t.final_derivation());
  return out;
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "innermost") return Strategy::Innermost;
  if (name == "outermost") return Strategy::Outermost;
  if (name == "given-order") return Strategy::GivenOrder;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Innermost: return "innermost";
    case Strategy::Outermost: return "outermost";
    case Strategy::GivenOrder: return "given-order";
  }
  return "?";
}

std::optional<Redex> select_redex(const std::vector<Redex>& redexes, Strategy s) {
  if (redexes.empty()) return std::nullopt;
  switch (s) {
    case Strategy::Outermost:
      return redexes.front();
    case Strategy::Innermost:
      for (const auto& r : redexes) {
        bool has_inner = false;
        for (const auto& other : redexes)
          if (is_proper_prefix(r.path, other.path)) {
            has_inner = true;
            break;
          }
        if (!has_inner) return r;
      }
      return redexes.front();
    case Strategy::GivenOrder: {
      const Redex* best = &redexes.front();
      for (const auto& r : redexes)
        if (r.kind < best->kind) best = &r;
      return *best;
    }
  }
  return std::nullopt;
}

NormalizeResult normalize(const Derivation& d, Strategy strategy, std::size_t fuel, const ReductionOptions& opts) {
  Trace trace{d, {}};
  Derivation cur = d;
  for (;;) {
    auto r = select_redex(find_redexes(cur, opts), strategy);
    if (!r) return {cur, std::move(trace), false};
    if (trace.steps.size() >= fuel) return {cur, std::move(trace), true};
    cur = reduce_at(cur, *r, opts);
    trace.steps.push_back({*r, cur});
  }
}

SearchResult reduces_to(const Derivation& d, const DerivationPredicate& target, std::size_t fuel,
                        const ReductionOptions& opts) {
  struct Node {
    Derivation d;
    std::size_t parent;
    std::optional<Redex> via;
  };
  std::vector<Node> nodes{{d, 0, std::nullopt}};
  auto trace_to = [&](std::size_t i) {
    std::vector<TraceStep> rev;
    for (; nodes[i].via; i = nodes[i].parent) rev.push_back({*nodes[i].via, nodes[i].d});
    return Trace{d, {rev.rbegin(), rev.rend()}};
  };
  if (target(d)) return {SearchStatus::Found, Trace{d, {}}, 1};

  std::unordered_set<Derivation, DerivationHash> visited{canonicalize_binders(d)};
  std::size_t spent = 0;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Derivation cur = nodes[head].d;
    for (const auto& r : find_redexes(cur, opts)) {
      if (spent >= fuel) return {SearchStatus::OutOfFuel, trace_to(head), nodes.size()};
      Derivation next = reduce_at(cur, r, opts);
      ++spent;
      if (!visited.insert(canonicalize_binders(next)).second) continue;
      nodes.push_back({next, head, r});
      if (target(next)) return {SearchStatus::Found, trace_to(nodes.size() - 1), nodes.size()};
    }
  }
  return {SearchStatus::Exhausted, trace_to(nodes.size() - 1), nodes.size()};
}

}  // namespace bilat
