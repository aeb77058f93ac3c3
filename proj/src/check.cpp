#include "bilat/check.hpp"

#include <map>

namespace bilat {

std::string format_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.assumptions.size(); ++i) {
    if (i) out += ", ";
    out += display_statement(s.assumptions[i]);
  }
  if (!out.empty()) out += ' ';
  out += "|- ";
  out += s.conclusion.is_falsum() ? "_|_" : display_statement(s.conclusion.statement());
  return out;
}

CheckError::CheckError(Path path, std::string rule, std::string detail)
    : std::runtime_error("at " + format_path(path) + " (" + rule + "): " + detail),
      path_(std::move(path)),
      rule_(std::move(rule)),
      detail_(std::move(detail)) {}

std::optional<std::vector<Statement>> match_schema(const RuleSchema& schema, const std::vector<Judgement>& premises,
                                                   const Judgement& conclusion) {
  if (premises.size() != schema.premises.size()) return std::nullopt;
  auto attempt = [&](const std::vector<std::size_t>& order) -> std::optional<std::vector<Statement>> {
    MetaBindings env;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (!match(schema.premises[i].judgement, premises[order[i]], env)) return std::nullopt;
    if (!match(schema.conclusion, conclusion, env)) return std::nullopt;
    std::vector<Statement> discharged;
    for (const auto& p : schema.premises) {
      if (!p.discharge) continue;
      auto j = instantiate(*p.discharge, env);
      if (!j || j->is_falsum()) return std::nullopt;
      discharged.push_back(j->statement());
    }
    return discharged;
  };
  std::vector<std::size_t> order(premises.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (auto r = attempt(order)) return r;
  if (schema.unordered_premises && order.size() == 2) return attempt({1, 0});
  return std::nullopt;
}

namespace {

struct Checker {
  const BasicSystem& b;
  const RuleTable& table;
  std::vector<std::pair<std::string, Statement>> scope;
  std::map<std::string, Statement> open;
  Sequent result;
  Path path;

  [[noreturn]] void fail(const Derivation& d, const std::string& detail) {
    std::string rule(rule_name(d.kind()));
    if (d.kind() == RuleKind::Basic) rule += ":" + std::to_string(d.basic_index());
    throw CheckError(path, rule, detail);
  }

  void leaf(const Derivation& d) {
    const Statement& s = d.conclusion().statement();
    if (d.label().empty()) fail(d, "assumption without a label");
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first != d.label()) continue;
      if (!(it->second == s))
        fail(d, "assumption '" + d.label() + "' is " + print_statement(s) + " but its binder discharges " +
                    print_statement(it->second));
      return;
    }
    auto [pos, inserted] = open.emplace(d.label(), s);
    if (!inserted && !(pos->second == s))
      fail(d, "open label '" + d.label() + "' names both " + print_statement(pos->second) + " and " +
                  print_statement(s));
    result.assumptions.push_back(s);
  }

  void basic(const Derivation& d) {
    if (d.basic_index() >= b.rules().size())
      fail(d, "basic rule index " + std::to_string(d.basic_index()) + " out of range (system has " +
                  std::to_string(b.rules().size()) + " rules)");
    const BasicRule& r = b.rules()[d.basic_index()];
    if (d.conclusion() != Judgement(Statement::plus(Prop::atom(r.conclusion))))
      fail(d, "conclusion " + print_judgement(d.conclusion()) + " does not match rule conclusion +" + r.conclusion);
    if (d.premises().size() != r.premises.size())
      fail(d, "expected " + std::to_string(r.premises.size()) + " premises, found " +
                  std::to_string(d.premises().size()));
    for (std::size_t i = 0; i < r.premises.size(); ++i)
      if (d.premise(i).conclusion() != Judgement(Statement::plus(Prop::atom(r.premises[i]))))
        fail(d, "premise " + std::to_string(i) + " concludes " + print_judgement(d.premise(i).conclusion()) +
                    ", rule needs +" + r.premises[i]);
  }

  void axiom(const Derivation& d) {
    if (!d.premises().empty()) fail(d, "axioms take no premises");
    const Judgement& c = d.conclusion();
    if (c.is_falsum() || c.statement().sign != Sign::Minus || !c.statement().prop.is_atom() ||
        !b.negative_axioms().count(c.statement().prop.name()))
      fail(d, print_judgement(c) + " is not a negative axiom of the basic system");
  }

  std::vector<Statement> logical(const Derivation& d) {
    const RuleSchema& schema = table.schema(d.kind());
    std::size_t slots = discharge_slot_count(d.kind());
    if (d.discharges().size() > slots)
      fail(d, "dangling discharge label '" + d.discharges()[slots] + "'");
    if (d.discharges().size() < slots)
      fail(d, "expected " + std::to_string(slots) + " discharge labels, found " +
                  std::to_string(d.discharges().size()));
    if (d.premises().size() != schema.premises.size())
      fail(d, "expected " + std::to_string(schema.premises.size()) + " premises, found " +
                  std::to_string(d.premises().size()));
    std::vector<Judgement> premises;
    for (const auto& p : d.premises()) premises.push_back(p.conclusion());
    auto discharged = match_schema(schema, premises, d.conclusion());
    if (!discharged) {
      std::string shape;
      for (std::size_t i = 0; i < premises.size(); ++i) shape += (i ? ", " : "") + print_judgement(premises[i]);
      fail(d, "premises [" + shape + "] and conclusion " + print_judgement(d.conclusion()) +
                  " do not instantiate the schema");
    }
    for (const auto& label : d.discharges()) {
      if (label.empty()) fail(d, "empty discharge label");
      for (const auto& [bound, _] : scope)
        if (bound == label) fail(d, "discharge label '" + label + "' shadows an enclosing binder");
    }
    return *discharged;
  }

  void visit(const Derivation& d) {
    std::vector<Statement> discharged;
    switch (d.kind()) {
      case RuleKind::Assume:
        return leaf(d);
      case RuleKind::Basic:
        basic(d);
        break;
      case RuleKind::Axiom:
        return axiom(d);
      default:
        discharged = logical(d);
        break;
    }
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      std::size_t pushed = 0;
      for (std::size_t s = 0; s < d.discharges().size(); ++s) {
        if (discharge_premise(d.kind(), s) != i) continue;
        scope.emplace_back(d.discharges()[s], discharged[s]);
        ++pushed;
      }
      path.push_back(i);
      visit(d.premise(i));
      path.pop_back();
      scope.erase(scope.end() - static_cast<std::ptrdiff_t>(pushed), scope.end());
    }
  }
};

}  // namespace

Sequent check_derivation(const Derivation& d, const BasicSystem& b, const RuleTable& table) {
  Checker c{b, table, {}, {}, {}, {}};
  c.visit(d);
  c.result.conclusion = d.conclusion();
  return std::move(c.result);
}

bool is_well_formed(const Derivation& d, const BasicSystem& b, const RuleTable& table) {
  try {
    check_derivation(d, b, table);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

}  // namespace bilat
