#ifndef BILAT_ENUMERATE_HPP
#define BILAT_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/derivation.hpp"
#include "bilat/schema.hpp"

namespace bilat {

struct EnumerationBounds {
  std::size_t max_size = 1;
  // Bound on the node count of every proposition in the derivation; defaults
  // to max_size.
  std::optional<std::size_t> max_prop_size;

  std::size_t prop_bound() const { return max_prop_size.value_or(max_size); }
};

using DerivationSink = std::function<void(const Derivation&)>;

// Streams every well-formed derivation with at most `max_size` nodes whose
// propositions are built from `atoms`, once per label-renaming class, in
// canonical labelling (free labels x0, x1, ..., binders u0, u1, ...). Output
// is ordered by size, then deterministically within a size.
void enumerate_derivations(const BasicSystem& b, const std::vector<std::string>& atoms,
                           const EnumerationBounds& bounds, const DerivationSink& sink,
                           const RuleTable& table = RuleTable::standard());

std::vector<Derivation> enumerate_derivations(const BasicSystem& b, const std::vector<std::string>& atoms,
                                              const EnumerationBounds& bounds,
                                              const RuleTable& table = RuleTable::standard());

// Unlabelled rule trees: assumption leaves carry an empty label and binders
// carry no discharge labels yet. Indexed by size (entry 0 is empty).
std::vector<std::vector<Derivation>> enumerate_shapes(const BasicSystem& b, const std::vector<std::string>& atoms,
                                                      const EnumerationBounds& bounds,
                                                      const RuleTable& table = RuleTable::standard());

// Every way of labelling a shape: each leaf is bound by a compatible enclosing
// binder or left open, and open leaves with equal statements are grouped into
// shared labels in every possible way.
void enumerate_labellings(const Derivation& shape, const RuleTable& table, const DerivationSink& sink);

}  // namespace bilat

#endif  // BILAT_ENUMERATE_HPP
