#ifndef BILAT_VALIDITY_HPP
#define BILAT_VALIDITY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/derivation.hpp"
#include "bilat/rewrite.hpp"
#include "bilat/universe.hpp"

namespace bilat {

enum class Status { Certified, Refuted, Unknown };
std::string_view status_name(Status s);

struct CanonicalForm {
  enum class Kind { ByIntro, ByBasic, ByRaa, BotNormal, NotCanonical };
  Kind kind = Kind::NotCanonical;
  // Last rule of the canonical reduct (Basic or Axiom for ByBasic).
  RuleKind rule = RuleKind::Assume;
  std::size_t basic_index = 0;
  std::vector<Derivation> parts;
  std::optional<Derivation> body;           // ByRaa
  std::optional<Statement> discharged;      // ByRaa
  std::optional<std::string> label;         // ByRaa binder
  std::optional<Derivation> reduct;         // the canonical reduct itself
  std::optional<Trace> trace;
  SearchStatus search = SearchStatus::OutOfFuel;
  bool input_normal = false;                // the input has no redex
};

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OpenDerivationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CanonicalForm classify_canonical(const Derivation& d, const BasicSystem& b, std::size_t fuel,
                                 const ReductionOptions& opts = {});

struct Verdict {
  Status status = Status::Unknown;
  std::size_t size_bound = 0;
  std::size_t fuel = 0;
  bool vacuous = false;  // some universal obligation had no instances at the bound
  std::vector<std::string> notes;
  std::optional<Trace> witness;
  std::optional<Derivation> counterexample;
};

struct ValiditySet {
  Statement statement;
  std::vector<Derivation> members;  // certified members, canonical labelling
  std::size_t bound = 0;
};

struct KleeneResult {
  explicit KleeneResult(const Prop& p) : plus{Statement::plus(p), {}, 0}, minus{Statement::minus(p), {}, 0} {}

  ValiditySet plus;
  ValiditySet minus;
  // Members that could be neither certified nor excluded within the budget.
  std::vector<Derivation> plus_unknown;
  std::vector<Derivation> minus_unknown;
  // Certified plus-sets X_0 = {}, X_1, ..., X_n = X_{n+1}.
  std::vector<std::vector<Derivation>> history;
  std::size_t iterations = 0;
  std::size_t universe_size = 0;
};

struct CertifyConfig {
  std::size_t size_bound = 7;
  std::size_t fuel = 10000;
  // Bound on proposition size in generated universes; 0 picks the largest
  // proposition of the derivation being certified.
  std::size_t prop_bound = 0;
  ReductionOptions reduction;
};

// Bounded validity engine over one basic system. Universes, fixed points and
// statuses are memoised, so one instance should serve many queries.
class Certifier {
 public:
  // Throws InconsistentSystem.
  Certifier(const BasicSystem& b, std::vector<std::string> atoms, const CertifyConfig& config);
  ~Certifier();
  Certifier(const Certifier&) = delete;
  Certifier& operator=(const Certifier&) = delete;

  Verdict certify(const Derivation& d);
  Status closed_status(const Derivation& d);
  // Status of an open derivation against the certified inhabitants of its
  // assumptions. Never Refuted.
  Status open_status(const Derivation& d, bool* vacuous = nullptr);
  // Status of a closed derivation of falsum.
  Status bot_status(const Derivation& d);

  const KleeneResult& fixed_point(const Prop& p);
  Universe& universe() { return *universe_; }
  const CertifyConfig& config() const { return config_; }

 private:
  struct Engine;
  struct Member;
  Engine& engine(const Prop& p);
  Member classify_member(const Derivation& d);
  Status raa_status(const Member& m, const std::vector<Derivation>& conj_hi, const std::vector<Derivation>& conj_lo,
                    bool* vacuous);

  const BasicSystem& b_;
  CertifyConfig config_;
  std::unique_ptr<Universe> universe_;
  std::map<Prop, std::unique_ptr<Engine>> engines_;
  std::map<Derivation, Status> bot_memo_;
  std::map<Derivation, Status> closed_memo_;
};

std::vector<std::string> certification_atoms(const BasicSystem& b, const Derivation& d);
std::size_t largest_prop(const Derivation& d);

Verdict certify(const Derivation& d, const BasicSystem& b, std::size_t size_bound, std::size_t fuel,
                const ReductionOptions& opts = {});

KleeneResult kleene_validity_sets(const BasicSystem& b, const std::string& atom, std::size_t size_bound,
                                  std::size_t fuel, const ReductionOptions& opts = {});

struct PreservationReport {
  RuleKind rule = RuleKind::Assume;
  std::size_t instantiations = 0;  // metavariable instances tried
  std::size_t tuples = 0;          // premise tuples built
  std::size_t certified = 0;
  std::size_t unknown = 0;
  std::size_t refuted = 0;
  std::vector<Derivation> counterexamples;
  bool vacuous() const { return tuples == 0; }
};

// Applies `rule` to every tuple of certified premises within the bound and
// certifies the result. Discharging premises range over open derivations from
// the discharged hypothesis that certify as open derivations.
PreservationReport check_rule_preservation(const BasicSystem& b, RuleKind rule, std::size_t size_bound,
                                           std::size_t fuel, std::size_t prop_bound = 3,
                                           const ReductionOptions& opts = {},
                                           const std::vector<std::string>& extra_atoms = {});

std::string format_verdict(const Verdict& v, const std::string& source);

}  // namespace bilat

#endif  // BILAT_VALIDITY_HPP
