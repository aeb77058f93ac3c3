#ifndef BILAT_UNIVERSE_HPP
#define BILAT_UNIVERSE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/derivation.hpp"
#include "bilat/schema.hpp"

namespace bilat {

// Goal-directed generator of derivations whose only open assumptions come from
// a context of hypothesis slots. Slot i is labelled "u<i>"; binders introduced
// inside are labelled by their depth, so closed output is already in the
// canonical labelling. Every proposition stays within `prop_bound` nodes.
class Universe {
 public:
  Universe(const BasicSystem& b, std::vector<std::string> atoms, std::size_t prop_bound,
           const RuleTable& table = RuleTable::standard());

  // Derivations of `goal` with exactly `size` nodes.
  const std::vector<Derivation>& exact(const Judgement& goal, std::size_t size,
                                       const std::vector<Statement>& context = {});
  // Derivations of `goal` with at most `max_size` nodes, smallest first.
  std::vector<Derivation> up_to(const Judgement& goal, std::size_t max_size,
                                const std::vector<Statement>& context = {});

  std::size_t prop_bound() const { return prop_bound_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  static std::string slot_label(std::size_t i) { return "u" + std::to_string(i); }

 private:
  using Key = std::tuple<Judgement, std::size_t, std::vector<Statement>>;

  std::vector<Derivation> generate(const Judgement& goal, std::size_t size, const std::vector<Statement>& context);
  bool fits(const Judgement& j) const;

  const BasicSystem& b_;
  std::vector<std::string> atoms_;
  std::size_t prop_bound_;
  const RuleTable& table_;
  std::vector<Prop> props_;
  std::map<Key, std::vector<Derivation>> memo_;
};

}  // namespace bilat

#endif  // BILAT_UNIVERSE_HPP
