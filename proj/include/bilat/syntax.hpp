#ifndef BILAT_SYNTAX_HPP
#define BILAT_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bilat {

enum class Connective : std::uint8_t { Atom, And, Or, Not, Imp };

// Immutable proposition tree. Copies share structure.
class Prop {
 public:
  static Prop atom(std::string name);
  static Prop conj(Prop left, Prop right);
  static Prop disj(Prop left, Prop right);
  static Prop neg(Prop inner);
  static Prop imp(Prop left, Prop right);
  static Prop binary(Connective c, Prop left, Prop right);

  Connective kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Connective::Atom; }
  const std::string& name() const { return node_->name; }
  const Prop& left() const { return node_->children[0]; }
  const Prop& right() const { return node_->children[1]; }
  const Prop& inner() const { return node_->children[0]; }

  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  void collect_atoms(std::set<std::string>& out) const;

  friend bool operator==(const Prop& a, const Prop& b);
  friend std::strong_ordering operator<=>(const Prop& a, const Prop& b);

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Prop> children;
    std::size_t size;
    std::size_t depth;
    std::size_t hash;
  };
  explicit Prop(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Prop make(Connective kind, std::string name, std::vector<Prop> children);

  std::shared_ptr<const Node> node_;
};

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

struct Statement {
  Sign sign;
  Prop prop;

  static Statement plus(Prop p) { return {Sign::Plus, std::move(p)}; }
  static Statement minus(Prop p) { return {Sign::Minus, std::move(p)}; }

  bool is_atomic() const { return prop.is_atom(); }

  friend bool operator==(const Statement&, const Statement&) = default;
  friend std::strong_ordering operator<=>(const Statement& a, const Statement& b);
};

Statement conjugate(const Statement& s);

// A statement or the punctuation symbol falsum. Falsum is never a Statement.
class Judgement {
 public:
  Judgement(Statement s) : stmt_(std::move(s)) {}  // NOLINT: implicit by intent
  static Judgement falsum() { return Judgement(); }

  bool is_falsum() const { return !stmt_.has_value(); }
  const Statement& statement() const { return *stmt_; }
  const std::optional<Statement>& as_optional() const { return stmt_; }

  friend bool operator==(const Judgement&, const Judgement&) = default;
  friend std::strong_ordering operator<=>(const Judgement& a, const Judgement& b);

 private:
  Judgement() = default;
  std::optional<Statement> stmt_;
};

std::size_t hash_value(const Statement& s);
std::size_t hash_value(const Judgement& j);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

bool is_identifier(std::string_view s);

Prop parse_prop(std::string_view text);
Statement parse_statement(std::string_view text);

// Parses a statement starting at `pos` and stops at the first token that
// cannot continue it. Advances `pos` past the statement and trailing spaces.
Statement parse_statement_prefix(std::string_view text, std::size_t& pos);

std::string print_prop(const Prop& p);
std::string print_statement(const Statement& s);
std::string print_judgement(const Judgement& j);

// Display form used in sequent printouts: binary connectives under a sign
// are wrapped in parentheses, e.g. "+(p & q)".
std::string display_statement(const Statement& s);

// All propositions over `atoms` with at most `max_size` nodes, ordered by
// size and then structurally.
std::vector<Prop> props_up_to(const std::vector<std::string>& atoms, std::size_t max_size);

}  // namespace bilat

#endif  // BILAT_SYNTAX_HPP
