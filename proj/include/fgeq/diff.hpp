#pragma once

#include <string>
#include <vector>

#include "fgeq/solver.hpp"

namespace fgeq::oracle {

struct OracleReport {
  Equation equation;
  std::size_t bound = 0;
  std::vector<Word> missing;   // brute-force solutions the solver does not cover
  std::vector<Word> spurious;  // solver outputs failing direct substitution
  std::size_t family_samples_checked = 0;
  std::size_t brute_count = 0;

  bool passed() const { return missing.empty() && spurious.empty(); }
};

/// Compares a solver answer with exhaustive search over reduced words of length <= bound.
OracleReport diff_test(const Equation& eq, const SolutionSet& answer, std::size_t bound, long k, std::uint32_t sigma = 0);
OracleReport diff_test(const Equation& eq, std::size_t bound, long k, std::uint32_t sigma = 0,
                       const SolveConfig& config = {});

}  // namespace fgeq::oracle
