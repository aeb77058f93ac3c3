#include "bilat/sweeps.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "bilat/check.hpp"

namespace bilat {

namespace {

template <typename F>
void parallel_for(std::size_t n, std::size_t jobs, F&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < n; i += jobs) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

NormalizationReport normalization_sweep(const std::vector<Derivation>& corpus, Strategy strategy, std::size_t fuel,
                                        std::size_t jobs, const ReductionOptions& opts) {
  std::vector<std::size_t> steps(corpus.size());
  std::vector<char> exhausted(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    auto r = normalize(corpus[i], strategy, fuel, opts);
    steps[i] = r.trace.steps.size();
    exhausted[i] = r.exhausted;
  });
  NormalizationReport report;
  report.derivations = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    report.total_steps += steps[i];
    if (exhausted[i]) {
      ++report.exhausted;
      report.failures.push_back(corpus[i]);
    }
    if (!report.slowest || steps[i] > report.max_steps) {
      report.max_steps = steps[i];
      report.slowest = corpus[i];
    }
  }
  return report;
}

SubjectReductionReport subject_reduction_sweep(const std::vector<Derivation>& corpus, const BasicSystem& b,
                                               std::size_t jobs, const ReductionOptions& opts) {
  std::vector<std::size_t> counts(corpus.size());
  std::vector<std::vector<SubjectReductionViolation>> found(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    const Derivation& d = corpus[i];
    auto before = open_assumptions(d);
    std::set<OpenAssumption> allowed(before.begin(), before.end());
    auto redexes = find_redexes(d, opts);
    counts[i] = redexes.size();
    for (const auto& r : redexes) {
      Derivation next = reduce_at(d, r, opts);
      std::string reason;
      try {
        check_derivation(next, b);
      } catch (const CheckError& e) {
        reason = std::string("ill-formed contractum: ") + e.what();
      }
      if (reason.empty() && next.conclusion() != d.conclusion()) reason = "conclusion changed";
      if (reason.empty())
        for (const auto& a : open_assumptions(next))
          if (!allowed.count(a)) {
            reason = "new open assumption " + a.label + " : " + print_statement(a.statement);
            break;
          }
      if (!reason.empty()) found[i].push_back({d, r, reason});
    }
  });
  SubjectReductionReport report;
  report.derivations = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    report.redexes += counts[i];
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace bilat
