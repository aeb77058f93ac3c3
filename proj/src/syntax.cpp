#include "bilat/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace bilat {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Prop Prop::make(Connective kind, std::string name, std::vector<Prop> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->children = std::move(children);
  node->size = 1;
  node->depth = 1;
  node->hash = mix(static_cast<std::size_t>(kind), std::hash<std::string>{}(node->name));
  for (const auto& c : node->children) {
    node->size += c.size();
    node->depth = std::max(node->depth, c.depth() + 1);
    node->hash = mix(node->hash, c.hash());
  }
  return Prop(std::move(node));
}

Prop Prop::atom(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return make(Connective::Atom, std::move(name), {});
}
Prop Prop::conj(Prop l, Prop r) { return make(Connective::And, {}, {std::move(l), std::move(r)}); }
Prop Prop::disj(Prop l, Prop r) { return make(Connective::Or, {}, {std::move(l), std::move(r)}); }
Prop Prop::imp(Prop l, Prop r) { return make(Connective::Imp, {}, {std::move(l), std::move(r)}); }
Prop Prop::neg(Prop inner) { return make(Connective::Not, {}, {std::move(inner)}); }

Prop Prop::binary(Connective c, Prop l, Prop r) {
  if (c == Connective::Atom || c == Connective::Not) throw std::invalid_argument("not a binary connective");
  return make(c, {}, {std::move(l), std::move(r)});
}

void Prop::collect_atoms(std::set<std::string>& out) const {
  if (is_atom()) {
    out.insert(name());
    return;
  }
  for (const auto& c : node_->children) c.collect_atoms(out);
}

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_atom()) return a.name() <=> b.name();
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Statement& a, const Statement& b) {
  if (auto c = a.sign <=> b.sign; c != 0) return c;
  return a.prop <=> b.prop;
}

std::strong_ordering operator<=>(const Judgement& a, const Judgement& b) {
  if (a.is_falsum() || b.is_falsum()) return b.is_falsum() <=> a.is_falsum();
  return a.statement() <=> b.statement();
}

Statement conjugate(const Statement& s) { return {flip(s.sign), s.prop}; }

std::size_t hash_value(const Statement& s) {
  return mix(s.prop.hash(), s.sign == Sign::Plus ? 1 : 2);
}

std::size_t hash_value(const Judgement& j) {
  return j.is_falsum() ? 0x5bd1e995 : hash_value(j.statement());
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "syntax error at offset " << offset << ": " << message;
        if (!expected.empty()) {
          os << " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
          os << ")";
        }
        return os.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

namespace {

enum class Tok { Plus, Minus, Arrow, Amp, Bar, Tilde, LParen, RParen, Ident, Other, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t pos) : text_(text), pos_(pos) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  // Offset just past the last consumed token and any following whitespace.
  std::size_t resume_offset() const { return current_.offset; }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, start, {}};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      current_ = {k, start, text_.substr(start, 1)};
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Bar);
      case '~': return single(Tok::Tilde);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {Tok::Arrow, start, text_.substr(start, 2)};
          return;
        }
        return single(Tok::Minus);
      default:
        break;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Tok::Ident, start, text_.substr(start, pos_ - start)};
      return;
    }
    current_ = {Tok::Other, start, text_.substr(start, 1)};
  }

  std::string_view text_;
  std::size_t pos_;
  Token current_{Tok::End, 0, {}};
};

const std::vector<std::string> kPropStart = {"atom", "'~'", "'('"};

class PropParser {
 public:
  explicit PropParser(Lexer& lex) : lex_(lex) {}

  Prop parse_imp() {
    Prop left = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      Prop right = parse_imp();
      return Prop::imp(std::move(left), std::move(right));
    }
    return left;
  }

 private:
  Prop parse_or() {
    Prop left = parse_and();
    while (lex_.peek().kind == Tok::Bar) {
      lex_.take();
      left = Prop::disj(std::move(left), parse_and());
    }
    return left;
  }

  Prop parse_and() {
    Prop left = parse_neg();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      left = Prop::conj(std::move(left), parse_neg());
    }
    return left;
  }

  Prop parse_neg() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Tilde:
        lex_.take();
        return Prop::neg(parse_neg());
      case Tok::Ident: {
        if (!is_identifier(t.text))
          throw ParseError(t.offset, {"atom"}, "invalid atom name '" + std::string(t.text) + "'");
        Token id = lex_.take();
        return Prop::atom(std::string(id.text));
      }
      case Tok::LParen: {
        lex_.take();
        Prop inner = parse_imp();
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError(lex_.peek().offset, {"')'"}, "unbalanced parenthesis");
        lex_.take();
        return inner;
      }
      case Tok::End:
        throw ParseError(t.offset, kPropStart, "missing proposition");
      default:
        throw ParseError(t.offset, kPropStart, "unexpected '" + std::string(t.text) + "'");
    }
  }

  Lexer& lex_;
};

Sign parse_sign(Lexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
    Sign s = t.kind == Tok::Plus ? Sign::Plus : Sign::Minus;
    lex.take();
    return s;
  }
  throw ParseError(t.offset, {"'+'", "'-'"}, "statement must start with a sign");
}

void expect_end(const Lexer& lex) {
  if (lex.peek().kind != Tok::End)
    throw ParseError(lex.peek().offset, {"end of input"},
                     "trailing input '" + std::string(lex.peek().text) + "'");
}

int precedence(Connective c) {
  switch (c) {
    case Connective::Imp: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    case Connective::Atom: return 5;
  }
  return 5;
}

void print_into(std::string& out, const Prop& p, int min_prec) {
  bool wrap = precedence(p.kind()) < min_prec;
  if (wrap) out += '(';
  switch (p.kind()) {
    case Connective::Atom:
      out += p.name();
      break;
    case Connective::Not:
      out += '~';
      print_into(out, p.inner(), 4);
      break;
    case Connective::And:
      print_into(out, p.left(), 3);
      out += " & ";
      print_into(out, p.right(), 4);
      break;
    case Connective::Or:
      print_into(out, p.left(), 2);
      out += " | ";
      print_into(out, p.right(), 3);
      break;
    case Connective::Imp:
      print_into(out, p.left(), 2);
      out += " -> ";
      print_into(out, p.right(), 1);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Prop parse_prop(std::string_view text) {
  Lexer lex(text, 0);
  PropParser parser(lex);
  Prop p = parser.parse_imp();
  expect_end(lex);
  return p;
}

Statement parse_statement(std::string_view text) {
  std::size_t pos = 0;
  Statement s = parse_statement_prefix(text, pos);
  Lexer lex(text, pos);
  expect_end(lex);
  return s;
}

Statement parse_statement_prefix(std::string_view text, std::size_t& pos) {
  Lexer lex(text, pos);
  Sign sign = parse_sign(lex);
  PropParser parser(lex);
  Prop p = parser.parse_imp();
  pos = lex.resume_offset();
  return {sign, std::move(p)};
}

std::string print_prop(const Prop& p) {
  std::string out;
  print_into(out, p, 1);
  return out;
}

std::string print_statement(const Statement& s) {
  return (s.sign == Sign::Plus ? "+" : "-") + print_prop(s.prop);
}

std::string print_judgement(const Judgement& j) {
  return j.is_falsum() ? "_|_" : print_statement(j.statement());
}

std::string display_statement(const Statement& s) {
  std::string sign = s.sign == Sign::Plus ? "+" : "-";
  switch (s.prop.kind()) {
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      return sign + "(" + print_prop(s.prop) + ")";
    default:
      return sign + print_prop(s.prop);
  }
}

std::vector<Prop> props_up_to(const std::vector<std::string>& atoms, std::size_t max_size) {
  std::vector<std::vector<Prop>> by_size(max_size + 1);
  if (max_size >= 1) {
    std::set<std::string> sorted(atoms.begin(), atoms.end());
    for (const auto& a : sorted) by_size[1].push_back(Prop::atom(a));
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const auto& p : by_size[n - 1]) by_size[n].push_back(Prop::neg(p));
    for (Connective c : {Connective::And, Connective::Or, Connective::Imp}) {
      for (std::size_t i = 1; i + 1 < n; ++i) {
        for (const auto& l : by_size[i])
          for (const auto& r : by_size[n - 1 - i]) by_size[n].push_back(Prop::binary(c, l, r));
      }
    }
  }
  std::vector<Prop> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace bilat
