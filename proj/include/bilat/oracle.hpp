#ifndef BILAT_ORACLE_HPP
#define BILAT_ORACLE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/derivation.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/schema.hpp"

namespace bilat {

using Valuation = std::map<std::string, bool>;

class MissingAtom : public std::out_of_range {
 public:
  explicit MissingAtom(const std::string& atom) : std::out_of_range("valuation has no value for '" + atom + "'") {}
};

bool eval_prop(const Prop& p, const Valuation& v);
bool satisfies(const Statement& s, const Valuation& v);
bool satisfies(const Judgement& j, const Valuation& v);

// Every valuation over the atoms of the statements that satisfies the
// assumptions and respects b also satisfies the conclusion. Atoms with +a
// derivable in b are true and negative-axiom atoms are false.
bool entails(const std::vector<Statement>& assumptions, const Judgement& conclusion, const BasicSystem& b);

struct SoundnessReport {
  std::size_t derivations = 0;
  std::vector<Derivation> violations;
};

// Checks every enumerated derivation's sequent against `entails`. `jobs`
// worker threads share the work; the report does not depend on it.
SoundnessReport soundness_sweep(const BasicSystem& b, const std::vector<std::string>& atoms,
                                const EnumerationBounds& bounds, std::size_t jobs = 1,
                                const RuleTable& table = RuleTable::standard());

// Standard table with the conclusion of +&E1 replaced by its conjugate.
RuleTable corrupted_rule_table();

}  // namespace bilat

#endif  // BILAT_ORACLE_HPP
