#ifndef BILAT_SWEEPS_HPP
#define BILAT_SWEEPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bilat/basicsys.hpp"
#include "bilat/derivation.hpp"
#include "bilat/rewrite.hpp"

namespace bilat {

struct NormalizationReport {
  std::size_t derivations = 0;
  std::size_t exhausted = 0;
  std::size_t max_steps = 0;
  std::size_t total_steps = 0;
  std::optional<Derivation> slowest;
  std::vector<Derivation> failures;
};

NormalizationReport normalization_sweep(const std::vector<Derivation>& corpus, Strategy strategy, std::size_t fuel,
                                        std::size_t jobs = 1, const ReductionOptions& opts = {});

struct SubjectReductionViolation {
  Derivation input;
  Redex redex;
  std::string reason;
};

struct SubjectReductionReport {
  std::size_t derivations = 0;
  std::size_t redexes = 0;
  std::vector<SubjectReductionViolation> violations;
};

// For every redex of every derivation: the contractum is well formed, keeps
// the conclusion, and opens no (label, statement) pair that was not open.
SubjectReductionReport subject_reduction_sweep(const std::vector<Derivation>& corpus, const BasicSystem& b,
                                               std::size_t jobs = 1, const ReductionOptions& opts = {});

}  // namespace bilat

#endif  // BILAT_SWEEPS_HPP
