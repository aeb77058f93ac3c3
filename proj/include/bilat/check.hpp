#ifndef BILAT_CHECK_HPP
#define BILAT_CHECK_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/derivation.hpp"
#include "bilat/schema.hpp"

namespace bilat {

struct Sequent {
  std::vector<Statement> assumptions;  // open assumptions, pre-order
  Judgement conclusion = Judgement::falsum();
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// "+p, +q |- +(p & q)"; an empty context prints as "|- ...".
std::string format_sequent(const Sequent& s);

class CheckError : public std::runtime_error {
 public:
  CheckError(Path path, std::string rule, std::string detail);
  const Path& path() const { return path_; }
  const std::string& rule() const { return rule_; }
  const std::string& detail() const { return detail_; }

 private:
  Path path_;
  std::string rule_;
  std::string detail_;
};

// Throws CheckError at the first (pre-order) node that instantiates no schema.
Sequent check_derivation(const Derivation& d, const BasicSystem& b, const RuleTable& table = RuleTable::standard());

bool is_well_formed(const Derivation& d, const BasicSystem& b, const RuleTable& table = RuleTable::standard());

// Node-local schema check for a logical or coordination rule: premise and
// conclusion judgements only. Returns the statements discharged per slot.
std::optional<std::vector<Statement>> match_schema(const RuleSchema& schema, const std::vector<Judgement>& premises,
                                                   const Judgement& conclusion);

}  // namespace bilat

#endif  // BILAT_CHECK_HPP
