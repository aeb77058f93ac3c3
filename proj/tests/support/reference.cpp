#include "support/reference.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ref {

using bilat::Connective;
using bilat::Sign;

std::string data_file(const std::string& name) { return std::string(BILAT_TEST_DATA) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(std::string_view tok) {
    ws();
    if (s.substr(i, tok.size()) == tok) {
      i += tok.size();
      return true;
    }
    return false;
  }
  std::optional<Prop> imp() {
    auto l = disj();
    if (!l) return std::nullopt;
    if (eat("->")) {
      auto r = imp();
      if (!r) return std::nullopt;
      return Prop::imp(*l, *r);
    }
    return l;
  }
  std::optional<Prop> disj() {
    auto l = conj();
    while (l && eat("|")) {
      auto r = conj();
      if (!r) return std::nullopt;
      l = Prop::disj(*l, *r);
    }
    return l;
  }
  std::optional<Prop> conj() {
    auto l = neg();
    while (l && eat("&")) {
      auto r = neg();
      if (!r) return std::nullopt;
      l = Prop::conj(*l, *r);
    }
    return l;
  }
  std::optional<Prop> neg() {
    if (eat("~")) {
      auto in = neg();
      if (!in) return std::nullopt;
      return Prop::neg(*in);
    }
    if (eat("(")) {
      auto p = imp();
      if (!p || !eat(")")) return std::nullopt;
      return p;
    }
    ws();
    if (i >= s.size() || s[i] < 'a' || s[i] > 'z') return std::nullopt;
    std::size_t start = i++;
    while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                            std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    return Prop::atom(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

std::optional<Statement> parse_statement(std::string_view text) {
  Parser p{text};
  Sign sign;
  if (p.eat("+")) sign = Sign::Plus;
  else if (p.eat("-")) sign = Sign::Minus;
  else return std::nullopt;
  auto prop = p.imp();
  p.ws();
  if (!prop || p.i != text.size()) return std::nullopt;
  return Statement{sign, *prop};
}

std::vector<Prop> props(const std::vector<std::string>& atoms, std::size_t max_size) {
  std::vector<std::vector<Prop>> by(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    if (n == 1)
      for (const auto& a : atoms) by[1].push_back(Prop::atom(a));
    for (const auto& p : by[n - 1]) by[n].push_back(Prop::neg(p));
    for (std::size_t l = 1; l + 1 < n; ++l)
      for (const auto& x : by[l])
        for (const auto& y : by[n - 1 - l])
          for (Connective c : {Connective::And, Connective::Or, Connective::Imp}) by[n].push_back(Prop::binary(c, x, y));
  }
  std::vector<Prop> out;
  for (auto& v : by) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

bool is_stmt(const Judgement& j, Sign s) { return !j.is_falsum() && j.statement().sign == s; }
bool is_op(const Judgement& j, Sign s, Connective c) { return is_stmt(j, s) && j.statement().prop.kind() == c; }
const Prop& prop_of(const Judgement& j) { return j.statement().prop; }
bool same(const Judgement& j, Sign s, const Prop& p) { return is_stmt(j, s) && prop_of(j) == p; }

}  // namespace

std::optional<std::vector<Statement>> local_rule(RuleKind kind, const std::vector<Judgement>& ps,
                                                 const Judgement& c) {
  using R = RuleKind;
  const auto P = Sign::Plus;
  const auto M = Sign::Minus;
  const std::vector<Statement> none;
  auto arity = [&](std::size_t n) { return ps.size() == n; };
  switch (kind) {
    case R::PlusAndI:
      if (arity(2) && is_op(c, P, Connective::And) && same(ps[0], P, prop_of(c).left()) &&
          same(ps[1], P, prop_of(c).right()))
        return none;
      break;
    case R::PlusAndE1:
    case R::PlusAndE2:
      if (arity(1) && is_op(ps[0], P, Connective::And) &&
          same(c, P, kind == R::PlusAndE1 ? prop_of(ps[0]).left() : prop_of(ps[0]).right()))
        return none;
      break;
    case R::MinusAndI1:
    case R::MinusAndI2:
      if (arity(1) && is_op(c, M, Connective::And) &&
          same(ps[0], M, kind == R::MinusAndI1 ? prop_of(c).left() : prop_of(c).right()))
        return none;
      break;
    case R::MinusAndE:
    case R::PlusOrE: {
      Sign s = kind == R::MinusAndE ? M : P;
      Connective op = kind == R::MinusAndE ? Connective::And : Connective::Or;
      if (arity(3) && is_op(ps[0], s, op) && !c.is_falsum() && ps[1] == c && ps[2] == c)
        return std::vector<Statement>{{s, prop_of(ps[0]).left()}, {s, prop_of(ps[0]).right()}};
      break;
    }
    case R::PlusOrI1:
    case R::PlusOrI2:
      if (arity(1) && is_op(c, P, Connective::Or) &&
          same(ps[0], P, kind == R::PlusOrI1 ? prop_of(c).left() : prop_of(c).right()))
        return none;
      break;
    case R::MinusOrI:
      if (arity(2) && is_op(c, M, Connective::Or) && same(ps[0], M, prop_of(c).left()) &&
          same(ps[1], M, prop_of(c).right()))
        return none;
      break;
    case R::MinusOrE1:
    case R::MinusOrE2:
      if (arity(1) && is_op(ps[0], M, Connective::Or) &&
          same(c, M, kind == R::MinusOrE1 ? prop_of(ps[0]).left() : prop_of(ps[0]).right()))
        return none;
      break;
    case R::PlusNegI:
      if (arity(1) && is_op(c, P, Connective::Not) && same(ps[0], M, prop_of(c).inner())) return none;
      break;
    case R::PlusNegE:
      if (arity(1) && is_op(ps[0], P, Connective::Not) && same(c, M, prop_of(ps[0]).inner())) return none;
      break;
    case R::MinusNegI:
      if (arity(1) && is_op(c, M, Connective::Not) && same(ps[0], P, prop_of(c).inner())) return none;
      break;
    case R::MinusNegE:
      if (arity(1) && is_op(ps[0], M, Connective::Not) && same(c, P, prop_of(ps[0]).inner())) return none;
      break;
    case R::PlusImpI:
      if (arity(1) && is_op(c, P, Connective::Imp) && same(ps[0], P, prop_of(c).right()))
        return std::vector<Statement>{{P, prop_of(c).left()}};
      break;
    case R::PlusImpE:
      if (arity(2) && is_op(ps[0], P, Connective::Imp) && same(ps[1], P, prop_of(ps[0]).left()) &&
          same(c, P, prop_of(ps[0]).right()))
        return none;
      break;
    case R::MinusImpI:
      if (arity(2) && is_op(c, M, Connective::Imp) && same(ps[0], P, prop_of(c).left()) &&
          same(ps[1], M, prop_of(c).right()))
        return none;
      break;
    case R::MinusImpE1:
      if (arity(1) && is_op(ps[0], M, Connective::Imp) && same(c, P, prop_of(ps[0]).left())) return none;
      break;
    case R::MinusImpE2:
      if (arity(1) && is_op(ps[0], M, Connective::Imp) && same(c, M, prop_of(ps[0]).right())) return none;
      break;
    case R::Falsum:
      if (arity(2) && c.is_falsum() && !ps[0].is_falsum() && !ps[1].is_falsum() &&
          ps[1].statement() == bilat::conjugate(ps[0].statement()))
        return none;
      break;
    case R::Raa:
      if (arity(1) && ps[0].is_falsum() && !c.is_falsum())
        return std::vector<Statement>{bilat::conjugate(c.statement())};
      break;
    default:
      break;
  }
  return std::nullopt;
}

std::size_t slot_premise(RuleKind kind, std::size_t slot) {
  if (kind == RuleKind::PlusOrE || kind == RuleKind::MinusAndE) return slot + 1;
  return 0;
}

namespace {

std::size_t arity_of(RuleKind k) {
  using R = RuleKind;
  switch (k) {
    case R::MinusAndE:
    case R::PlusOrE:
      return 3;
    case R::PlusAndI:
    case R::MinusOrI:
    case R::PlusImpE:
    case R::MinusImpI:
    case R::Falsum:
      return 2;
    default:
      return 1;
  }
}

struct Item {
  Derivation d;
  std::map<std::string, Statement> free;
  std::set<std::string> binders;
};

void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (parts == 0) {
    if (total == 0) f(cur);
    return;
  }
  for (std::size_t n = 1; n + (parts - 1) <= total; ++n) {
    cur.push_back(n);
    compositions(total - n, parts - 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::set<Derivation> brute_enumerate(const bilat::BasicSystem& b, const std::vector<std::string>& atoms,
                                     std::size_t max_size, std::size_t prop_bound) {
  std::vector<Judgement> judgements{Judgement::falsum()};
  std::set<Judgement> allowed;
  for (const auto& p : props(atoms, prop_bound))
    for (Sign s : {Sign::Plus, Sign::Minus}) judgements.push_back(Statement{s, p});
  allowed.insert(judgements.begin(), judgements.end());
  std::set<std::string> atom_set(atoms.begin(), atoms.end());

  std::vector<std::string> pool;
  for (std::size_t i = 0; i < max_size; ++i) pool.push_back("l" + std::to_string(i));

  std::vector<std::vector<Item>> by(max_size + 1);
  for (const auto& j : judgements) {
    if (j.is_falsum()) continue;
    for (const auto& l : pool) by[1].push_back({Derivation::assume(l, j.statement()), {{l, j.statement()}}, {}});
  }
  for (const auto& c : b.negative_axioms())
    if (atom_set.count(c)) by[1].push_back({Derivation::axiom(Statement::minus(Prop::atom(c))), {}, {}});

  // Emits every labelling of one node over already-built premises.
  auto emit = [&](RuleKind kind, std::size_t basic_index, const std::vector<const Item*>& parts, const Judgement& c,
                  const std::vector<Statement>& discharged, std::vector<Item>& out) {
    std::vector<std::vector<std::string>> options(discharged.size());
    for (std::size_t s = 0; s < discharged.size(); ++s) {
      const Item& it = *parts[slot_premise(kind, s)];
      for (const auto& [l, st] : it.free)
        if (st == discharged[s] && !it.binders.count(l)) options[s].push_back(l);
      for (const auto& l : pool)
        if (!it.free.count(l) && !it.binders.count(l)) {
          options[s].push_back(l);
          break;
        }
    }
    std::vector<std::string> choice(discharged.size());
    std::function<void(std::size_t)> pick = [&](std::size_t s) {
      if (s < discharged.size()) {
        for (const auto& l : options[s]) {
          choice[s] = l;
          pick(s + 1);
        }
        return;
      }
      Item item{Derivation::assume("tmp", Statement::plus(Prop::atom("p"))), {}, {}};
      std::vector<Derivation> premises;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        premises.push_back(parts[i]->d);
        item.binders.insert(parts[i]->binders.begin(), parts[i]->binders.end());
        for (const auto& [l, st] : parts[i]->free) {
          bool bound = false;
          for (std::size_t t = 0; t < choice.size(); ++t)
            if (slot_premise(kind, t) == i && choice[t] == l) bound = true;
          if (bound) continue;
          auto [pos, inserted] = item.free.emplace(l, st);
          if (!inserted && pos->second != st) return;
        }
      }
      item.binders.insert(choice.begin(), choice.end());
      if (kind == RuleKind::Basic)
        item.d = Derivation::basic(basic_index, c.statement(), std::move(premises));
      else
        item.d = Derivation::make(kind, c, std::move(premises), choice);
      out.push_back(std::move(item));
    };
    pick(0);
  };

  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<Item> fresh;
    for (std::size_t k = 0; k < b.rules().size(); ++k) {
      const auto& rule = b.rules()[k];
      Judgement c = Statement::plus(Prop::atom(rule.conclusion));
      if (!allowed.count(c)) continue;
      if (rule.premises.empty()) {
        if (n == 1) fresh.push_back({Derivation::basic(k, c.statement(), {}), {}, {}});
        continue;
      }
      std::vector<std::size_t> cur;
      compositions(n - 1, rule.premises.size(), cur, [&](const std::vector<std::size_t>& sizes) {
        std::vector<const Item*> parts(sizes.size());
        std::function<void(std::size_t)> go = [&](std::size_t i) {
          if (i == sizes.size()) {
            emit(RuleKind::Basic, k, parts, c, {}, fresh);
            return;
          }
          for (const auto& it : by[sizes[i]]) {
            if (it.d.conclusion() != Judgement(Statement::plus(Prop::atom(rule.premises[i])))) continue;
            parts[i] = &it;
            go(i + 1);
          }
        };
        go(0);
      });
    }
    for (std::size_t ki = 0; ki < bilat::kSchemaRuleCount; ++ki) {
      RuleKind kind = static_cast<RuleKind>(ki);
      std::vector<std::size_t> cur;
      compositions(n - 1, arity_of(kind), cur, [&](const std::vector<std::size_t>& sizes) {
        std::vector<const Item*> parts(sizes.size());
        std::vector<Judgement> concl(sizes.size(), Judgement::falsum());
        std::function<void(std::size_t)> go = [&](std::size_t i) {
          if (i == sizes.size()) {
            for (const auto& c : judgements)
              if (auto d = local_rule(kind, concl, c)) emit(kind, 0, parts, c, *d, fresh);
            return;
          }
          for (const auto& it : by[sizes[i]]) {
            parts[i] = &it;
            concl[i] = it.d.conclusion();
            go(i + 1);
          }
        };
        go(0);
      });
    }
    for (auto& it : fresh) by[n].push_back(std::move(it));
  }

  std::set<Derivation> out;
  for (const auto& bucket : by)
    for (const auto& it : bucket) out.insert(bilat::canonicalize(it.d));
  return out;
}

std::optional<std::size_t> brute_height(const std::vector<bilat::BasicRule>& rules,
                                        const std::set<std::string>& axioms, const std::string& atom,
                                        bool max_premise) {
  std::map<std::string, std::size_t> h;
  for (const auto& a : axioms) h[a] = 0;
  for (const auto& r : rules)
    if (r.premises.empty()) h[r.conclusion] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      if (r.premises.empty()) continue;
      std::vector<std::size_t> hs;
      for (const auto& p : r.premises)
        if (h.count(p)) hs.push_back(h[p]);
      if (hs.size() != r.premises.size()) continue;
      std::size_t cand = 1 + (max_premise ? *std::max_element(hs.begin(), hs.end())
                                          : *std::min_element(hs.begin(), hs.end()));
      auto it = h.find(r.conclusion);
      if (it == h.end() || cand < it->second) {
        h[r.conclusion] = cand;
        changed = true;
      }
    }
  }
  auto it = h.find(atom);
  if (it == h.end()) return std::nullopt;
  return it->second;
}

Prop random_prop(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
  std::uniform_int_distribution<std::size_t> atom(0, atoms.size() - 1);
  switch (pick(rng)) {
    case 1:
      return Prop::neg(random_prop(rng, atoms, depth - 1));
    case 2:
      return Prop::conj(random_prop(rng, atoms, depth - 1), random_prop(rng, atoms, depth - 1));
    case 3:
      return Prop::disj(random_prop(rng, atoms, depth - 1), random_prop(rng, atoms, depth - 1));
    case 4:
      return Prop::imp(random_prop(rng, atoms, depth - 1), random_prop(rng, atoms, depth - 1));
    default:
      return Prop::atom(atoms[atom(rng)]);
  }
}

Statement random_statement(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  std::bernoulli_distribution plus(0.5);
  return Statement{plus(rng) ? Sign::Plus : Sign::Minus, random_prop(rng, atoms, depth)};
}

RandomSystem random_acyclic_system(std::mt19937& rng, std::size_t max_atoms, std::size_t max_rules,
                                   bool with_axioms) {
  static const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g", "h"};
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  RandomSystem out;
  out.atoms.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(count(rng)));
  std::shuffle(out.atoms.begin(), out.atoms.end(), rng);
  const std::size_t n = out.atoms.size();
  std::uniform_int_distribution<std::size_t> rule_count(0, max_rules);
  std::uniform_int_distribution<std::size_t> head(0, n - 1);
  std::bernoulli_distribution take(0.4);
  for (std::size_t r = rule_count(rng); r > 0; --r) {
    std::size_t i = head(rng);
    bilat::BasicRule rule{{}, out.atoms[i]};
    for (std::size_t j = i + 1; j < n && rule.premises.size() < 3; ++j)
      if (take(rng)) rule.premises.push_back(out.atoms[j]);
    out.rules.push_back(std::move(rule));
  }
  std::bernoulli_distribution axiom(0.25);
  if (with_axioms)
    for (const auto& a : out.atoms)
      if (axiom(rng)) out.axioms.insert(a);
  std::sort(out.atoms.begin(), out.atoms.end());
  return out;
}

}  // namespace ref
