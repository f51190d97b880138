#pragma once

// Executable registry of the results of relative EP theory. Each law draws
// randomized witnesses of its hypothesis, evaluates the conclusion with the
// predicates of matrix_classes / canonical, and records residuals.
//
// Positive laws pass when no trial fails. Negative laws encode implications
// that are false; they pass when at least one counterexample is found, and
// trial 0 always evaluates the known fixed counterexample.
//
// Per-trial seeds are derived from (master seed, trial index, attempt), so a
// report depends only on (id, trials, seed, tolerance) and not on the order
// or concurrency of trial execution.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tepkit/matrix_core.hpp"

namespace tepkit {

struct LawInfo {
  std::string id;
  // What is checked, as an implication or equivalence.
  std::string statement;
  // How hypothesis witnesses are generated.
  std::string hypothesis;
  // The results this law verifies; every result of the theory appears under
  // exactly one law.
  std::vector<std::string> covers;
  bool negative = false;
};

struct LawFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string reason;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::pair<std::string, CMatrix>> witnesses;
};

struct LawReport {
  std::string law_id;
  bool negative = false;
  std::size_t trials_run = 0;
  std::size_t passes = 0;
  // Positive laws: trials whose conclusion failed. Negative laws: trials that
  // produced a counterexample.
  std::vector<LawFailure> failures;
  // Largest residual among conclusions required to hold.
  double max_residual = 0.0;
  // Number of pairwise item agreements checked (equivalence laws).
  std::size_t agreement_checks = 0;
  // Draws discarded because the hypothesis or the generic instance sat too
  // close to the tolerance boundary.
  std::size_t regenerated = 0;

  // Positive: no failures. Negative: at least one counterexample.
  bool ok() const noexcept { return negative ? !failures.empty() : failures.empty(); }
};

const std::vector<LawInfo>& law_registry();
const LawInfo& law_info(std::string_view id);  // UsageError if unknown

// Runs `trials` trials of law `id`. `threads` > 1 evaluates trials
// concurrently; the report is identical for any thread count.
LawReport check_law(std::string_view id, std::size_t trials, std::uint64_t seed,
                    const Tolerance& tol = {}, unsigned threads = 1);

// Runs every registered law in registry order.
std::vector<LawReport> check_all_laws(std::size_t trials, std::uint64_t seed,
                                      const Tolerance& tol = {}, unsigned threads = 1);

}  // namespace tepkit
