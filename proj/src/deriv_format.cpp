#include "bilat/deriv_format.hpp"

#include <cctype>

namespace bilat {

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Derivation parse_all() {
    skip();
    Derivation d = node();
    skip();
    if (pos_ != text_.size()) fail({"end of input"}, "trailing input after derivation");
    return d;
  }

 private:
  Derivation node() {
    expect('(');
    skip();
    std::size_t name_at = pos_;
    std::string name = word();
    skip();
    if (name == "assume") {
      std::string label = word();
      if (label.empty()) fail({"label"}, "expected an assumption label");
      skip();
      Statement s = parse_statement_prefix(text_, pos_);
      skip();
      expect(')');
      return Derivation::assume(std::move(label), std::move(s));
    }

    std::optional<RuleKind> kind;
    std::size_t basic_index = 0;
    if (name.rfind("basic:", 0) == 0) {
      std::string digits = name.substr(6);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        pos_ = name_at;
        fail({"rule name"}, "malformed basic rule index '" + name + "'");
      }
      basic_index = std::stoul(digits);
      kind = RuleKind::Basic;
    } else {
      kind = rule_from_name(name);
    }
    if (!kind) {
      pos_ = name_at;
      fail({"rule name"}, "unknown rule '" + name + "'");
    }

    Judgement conclusion = Judgement::falsum();
    if (text_.substr(pos_, 3) == "_|_") {
      pos_ += 3;
    } else {
      conclusion = parse_statement_prefix(text_, pos_);
    }
    skip();

    std::vector<std::string> discharges;
    if (text_.substr(pos_, 10) == ":discharge") {
      pos_ += 10;
      skip();
      while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
        std::string label = word();
        if (label.empty()) fail({"label"}, "expected a discharge label");
        discharges.push_back(std::move(label));
        skip();
      }
      if (discharges.empty()) fail({"label"}, "':discharge' needs at least one label");
    }

    std::vector<Derivation> premises;
    while (pos_ < text_.size() && text_[pos_] == '(') {
      premises.push_back(node());
      skip();
    }
    expect(')');

    if (*kind == RuleKind::Basic) {
      if (conclusion.is_falsum()) fail({"statement"}, "basic rules conclude a statement");
      if (!discharges.empty()) fail({"')'"}, "basic rules discharge nothing");
      return Derivation::basic(basic_index, conclusion.statement(), std::move(premises));
    }
    if (*kind == RuleKind::Axiom) {
      if (conclusion.is_falsum()) fail({"statement"}, "axioms conclude a statement");
      if (!discharges.empty() || !premises.empty()) fail({"')'"}, "axioms take no premises or discharges");
      return Derivation::axiom(conclusion.statement());
    }
    return Derivation::make(*kind, std::move(conclusion), std::move(premises), std::move(discharges));
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail({std::string("'") + c + "'"}, std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message) {
    throw ParseError(pos_, std::move(expected), message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string head(const Derivation& d) {
  std::string out = "(";
  if (d.is_assumption()) {
    out += "assume " + d.label() + " " + print_statement(d.conclusion().statement());
    return out;
  }
  if (d.kind() == RuleKind::Basic) out += "basic:" + std::to_string(d.basic_index());
  else out += rule_name(d.kind());
  out += " " + print_judgement(d.conclusion());
  if (!d.discharges().empty()) {
    out += " :discharge";
    for (const auto& l : d.discharges()) out += " " + l;
  }
  return out;
}

void print_rec(const Derivation& d, std::size_t indent, std::string& out) {
  out.append(indent, ' ');
  out += head(d);
  for (const auto& p : d.premises()) {
    out += '\n';
    print_rec(p, indent + 2, out);
  }
  out += ')';
}

void inline_rec(const Derivation& d, std::string& out) {
  out += head(d);
  for (const auto& p : d.premises()) {
    out += ' ';
    inline_rec(p, out);
  }
  out += ')';
}

}  // namespace

Derivation parse_derivation(std::string_view text) { return TreeParser(text).parse_all(); }

std::string print_derivation(const Derivation& d) {
  std::string out;
  print_rec(d, 0, out);
  out += '\n';
  return out;
}

std::string print_derivation_inline(const Derivation& d) {
  std::string out;
  inline_rec(d, out);
  return out;
}

}  // namespace bilat
