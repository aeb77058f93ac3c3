#ifndef BILAT_REWRITE_HPP
#define BILAT_REWRITE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bilat/derivation.hpp"

namespace bilat {

enum class RedexKind : std::uint8_t {
  BotRaaCut,
  DetourMinusImpE1,
  DetourMinusImpE2,
  DetourMinusOrE1,
  DetourMinusOrE2,
  DetourMinusAndE_L,
  DetourMinusAndE_R,
  DetourMinusNegE,
  DetourPlusNegE,
  BotOverAndPair,
  BotOverImpPair,
  BotOverOrPair,
  BotOverNegPair,
  RaaPermute_PlusAndE1,
  RaaPermute_PlusAndE2,
  RaaPermute_MinusOrE1,
  RaaPermute_MinusOrE2,
  RaaPermute_MinusNegE,
  RaaPermute_PlusNegE,
  RaaPermute_MinusAndE,
  RaaPermute_PlusOrE,
  RaaPermute_PlusImpE,
  RaaPermute_MinusImpE1,
  RaaPermute_MinusImpE2,
  // Detours for positive eliminations over their introductions.
  DetourPlusAndE1,
  DetourPlusAndE2,
  DetourPlusOrE1,
  DetourPlusOrE2,
  DetourPlusImpE,
};

inline constexpr std::size_t kRedexKindCount = 29;

struct RedexKindInfo {
  RedexKind kind;
  std::string_view name;
  bool mirror;     // symmetric completion of a printed case
  bool extension;  // not printed at all
};

const RedexKindInfo& redex_kind_info(RedexKind k);
std::string_view redex_kind_name(RedexKind k);
std::optional<RedexKind> redex_kind_from_name(std::string_view name);

struct ReductionOptions {
  // Restrict to the printed reduction set: drops mirror and extension cases.
  bool literal = false;
};

struct Redex {
  Path path;
  RedexKind kind;
  friend bool operator==(const Redex&, const Redex&) = default;
};

class RedexMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All redexes, ordered by path (lexicographic) and then by kind.
std::vector<Redex> find_redexes(const Derivation& d, const ReductionOptions& opts = {});
std::vector<RedexKind> redex_kinds_at(const Derivation& node, const ReductionOptions& opts = {});
bool is_normal(const Derivation& d, const ReductionOptions& opts = {});

// Contracts one redex. Fresh labels avoid every label already in `d`.
Derivation reduce_at(const Derivation& d, const Redex& r, const ReductionOptions& opts = {});

struct TraceStep {
  Redex redex;
  Derivation result;
};

struct Trace {
  Derivation initial;
  std::vector<TraceStep> steps;

  const Derivation& final_derivation() const { return steps.empty() ? initial : steps.back().result; }
};

// Re-applies every step and compares results bit for bit.
bool replay_trace(const Trace& t, const ReductionOptions& opts = {});

// "<step> <path> <kind>" per line, then the final derivation.
std::string format_trace(const Trace& t);

enum class Strategy { Innermost, Outermost, GivenOrder };

std::optional<Strategy> strategy_from_name(std::string_view name);
std::string_view strategy_name(Strategy s);

std::optional<Redex> select_redex(const std::vector<Redex>& redexes, Strategy s);

struct NormalizeResult {
  Derivation result;
  Trace trace;
  bool exhausted;  // fuel ran out before a normal form was reached
};

NormalizeResult normalize(const Derivation& d, Strategy strategy, std::size_t fuel, const ReductionOptions& opts = {});

enum class SearchStatus { Found, Exhausted, OutOfFuel };

struct SearchResult {
  SearchStatus status;
  // Reduction path to the match, or to the last derivation examined.
  Trace trace;
  std::size_t explored = 0;

  bool found() const { return status == SearchStatus::Found; }
};

using DerivationPredicate = std::function<bool(const Derivation&)>;

// Breadth-first search through all reduction choices. Fuel counts reduce_at
// applications. Exhausted means the reachable graph was fully explored.
SearchResult reduces_to(const Derivation& d, const DerivationPredicate& target, std::size_t fuel,
                        const ReductionOptions& opts = {});

}  // namespace bilat

#endif  // BILAT_REWRITE_HPP
