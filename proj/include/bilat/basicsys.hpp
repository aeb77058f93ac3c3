#ifndef BILAT_BASICSYS_HPP
#define BILAT_BASICSYS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bilat {

// +conclusion <- +premises[0], ..., +premises[n-1]
struct BasicRule {
  std::vector<std::string> premises;
  std::string conclusion;
  friend bool operator==(const BasicRule&, const BasicRule&) = default;
};

class CycleError : public std::runtime_error {
 public:
  explicit CycleError(std::vector<std::string> cycle);
  // Atoms along the cycle; the first atom is repeated at the end.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class HeightError : public std::runtime_error {
 public:
  enum class Reason { UnknownAtom, Undefined };
  HeightError(Reason reason, const std::string& atom);
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// How a rule's premise heights combine. MaxPremise is the usual rank.
enum class HeightMode { MaxPremise, MinPremise };

class BasicSystem {
 public:
  BasicSystem() = default;
  // Throws CycleError when the dependency relation is cyclic.
  BasicSystem(std::vector<BasicRule> rules, std::set<std::string> negative_axioms);

  const std::vector<BasicRule>& rules() const { return rules_; }
  const std::set<std::string>& negative_axioms() const { return negative_axioms_; }
  const std::set<std::string>& atoms() const { return atoms_; }
  bool mentions(const std::string& atom) const { return atoms_.count(atom) > 0; }

  bool derivable_plus(const std::string& atom) const { return derivable_.count(atom) > 0; }
  const std::set<std::string>& derivable_atoms() const { return derivable_; }
  bool is_consistent() const;

  std::size_t height(const std::string& atom, HeightMode mode = HeightMode::MaxPremise) const;
  std::optional<std::size_t> try_height(const std::string& atom, HeightMode mode = HeightMode::MaxPremise) const;

 private:
  std::vector<BasicRule> rules_;
  std::set<std::string> negative_axioms_;
  std::set<std::string> atoms_;
  std::set<std::string> derivable_;
  std::map<std::string, std::size_t> height_max_;
  std::map<std::string, std::size_t> height_min_;
};

BasicSystem load_basic_system(std::string_view text);
std::string save_basic_system(const BasicSystem& b);

inline bool derivable_plus(const BasicSystem& b, const std::string& atom) { return b.derivable_plus(atom); }
inline bool is_consistent(const BasicSystem& b) { return b.is_consistent(); }
inline std::size_t height(const BasicSystem& b, const std::string& atom, HeightMode mode = HeightMode::MaxPremise) {
  return b.height(atom, mode);
}

}  // namespace bilat

#endif  // BILAT_BASICSYS_HPP
