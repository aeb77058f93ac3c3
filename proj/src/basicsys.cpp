#include "bilat/basicsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "bilat/syntax.hpp"

namespace bilat {

namespace {

std::string join_cycle(const std::vector<std::string>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " <~ ";
    out += cycle[i];
  }
  return out;
}

// Depth-first search over conclusion -> premise edges.
std::optional<std::vector<std::string>> find_cycle(const std::vector<BasicRule>& rules,
                                                   const std::set<std::string>& atoms) {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& r : rules)
    for (const auto& p : r.premises) edges[r.conclusion].push_back(p);
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> found;
  std::function<bool(const std::string&)> visit = [&](const std::string& a) {
    state[a] = 1;
    stack.push_back(a);
    for (const auto& next : edges[a]) {
      if (state[next] == 1) {
        auto start = std::find(stack.begin(), stack.end(), next);
        std::vector<std::string> cycle(start, stack.end());
        cycle.push_back(next);
        found = cycle;
        return true;
      }
      if (state[next] == 0 && visit(next)) return true;
    }
    stack.pop_back();
    state[a] = 2;
    return false;
  };
  for (const auto& a : atoms)
    if (state[a] == 0 && visit(a)) return found;
  return std::nullopt;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : std::runtime_error("cyclic basic system: " + join_cycle(cycle)), cycle_(std::move(cycle)) {}

HeightError::HeightError(Reason reason, const std::string& atom)
    : std::runtime_error(reason == Reason::UnknownAtom ? "atom '" + atom + "' does not occur in the basic system"
                                                       : "height of '" + atom + "' is undefined: +" + atom +
                                                             " is not derivable and -" + atom + " is not an axiom"),
      reason_(reason) {}

BasicSystem::BasicSystem(std::vector<BasicRule> rules, std::set<std::string> negative_axioms)
    : rules_(std::move(rules)), negative_axioms_(std::move(negative_axioms)) {
  for (const auto& r : rules_) {
    atoms_.insert(r.conclusion);
    atoms_.insert(r.premises.begin(), r.premises.end());
  }
  atoms_.insert(negative_axioms_.begin(), negative_axioms_.end());
  if (auto cycle = find_cycle(rules_, atoms_)) throw CycleError(*cycle);

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules_) {
      if (derivable_.count(r.conclusion)) continue;
      if (std::all_of(r.premises.begin(), r.premises.end(), [&](const auto& p) { return derivable_.count(p) > 0; })) {
        derivable_.insert(r.conclusion);
        changed = true;
      }
    }
  }

  // Acyclicity makes this recursion terminate.
  auto compute = [&](HeightMode mode, std::map<std::string, std::size_t>& memo) {
    std::set<std::string> undefined;
    std::function<std::optional<std::size_t>(const std::string&)> h = [&](const std::string& a)
        -> std::optional<std::size_t> {
      if (auto it = memo.find(a); it != memo.end()) return it->second;
      if (undefined.count(a)) return std::nullopt;
      std::optional<std::size_t> best;
      if (negative_axioms_.count(a)) best = 0;
      for (const auto& r : rules_) {
        if (r.conclusion != a || best == std::size_t{0}) continue;
        if (r.premises.empty()) {
          best = 0;
          continue;
        }
        std::optional<std::size_t> combined;
        bool ok = true;
        for (const auto& p : r.premises) {
          auto hp = h(p);
          if (!hp) {
            ok = false;
            break;
          }
          if (!combined) combined = *hp;
          else combined = mode == HeightMode::MaxPremise ? std::max(*combined, *hp) : std::min(*combined, *hp);
        }
        if (!ok) continue;
        std::size_t value = *combined + 1;
        if (!best || value < *best) best = value;
      }
      if (best) memo[a] = *best;
      else undefined.insert(a);
      return best;
    };
    for (const auto& a : atoms_) h(a);
  };
  compute(HeightMode::MaxPremise, height_max_);
  compute(HeightMode::MinPremise, height_min_);
}

bool BasicSystem::is_consistent() const {
  for (const auto& a : negative_axioms_)
    if (derivable_.count(a)) return false;
  return true;
}

std::optional<std::size_t> BasicSystem::try_height(const std::string& atom, HeightMode mode) const {
  const auto& memo = mode == HeightMode::MaxPremise ? height_max_ : height_min_;
  auto it = memo.find(atom);
  if (it == memo.end()) return std::nullopt;
  return it->second;
}

std::size_t BasicSystem::height(const std::string& atom, HeightMode mode) const {
  if (!mentions(atom)) throw HeightError(HeightError::Reason::UnknownAtom, atom);
  auto h = try_height(atom, mode);
  if (!h) throw HeightError(HeightError::Reason::Undefined, atom);
  return *h;
}

namespace {

class SystemParser {
 public:
  explicit SystemParser(std::string_view text) : text_(text) {}

  BasicSystem parse() {
    std::vector<BasicRule> rules;
    std::set<std::string> axioms;
    for (skip(); pos_ < text_.size(); skip()) {
      char sign = text_[pos_];
      if (sign != '+' && sign != '-') fail({"'+'", "'-'"}, "expected a signed atom");
      ++pos_;
      skip();
      std::string head = ident();
      skip();
      if (sign == '-') {
        if (peek_arrow()) fail({"'.'"}, "negative axioms take no premises");
        expect('.');
        axioms.insert(head);
        continue;
      }
      BasicRule rule{{}, head};
      if (peek_arrow()) {
        pos_ += 2;
        skip();
        rule.premises.push_back(ident());
        skip();
        while (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          skip();
          rule.premises.push_back(ident());
          skip();
        }
      }
      expect('.');
      rules.push_back(std::move(rule));
    }
    return BasicSystem(std::move(rules), std::move(axioms));
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek_arrow() const { return text_.substr(pos_, 2) == "<-"; }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!is_identifier(name)) {
      pos_ = start;
      fail({"atom"}, "expected an atom name");
    }
    return name;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      std::vector<std::string> expected{std::string("'") + c + "'"};
      if (c == '.') expected = {"','", "'.'", "'<-'"};
      fail(expected, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message) {
    throw ParseError(pos_, std::move(expected), message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BasicSystem load_basic_system(std::string_view text) { return SystemParser(text).parse(); }

std::string save_basic_system(const BasicSystem& b) {
  std::string out;
  for (const auto& r : b.rules()) {
    out += "+" + r.conclusion;
    for (std::size_t i = 0; i < r.premises.size(); ++i) out += (i ? ", " : " <- ") + r.premises[i];
    out += ".\n";
  }
  for (const auto& a : b.negative_axioms()) out += "-" + a + ".\n";
  return out;
}

}  // namespace bilat
