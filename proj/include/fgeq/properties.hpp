#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgeq::props {

struct Check {
  explicit Check(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && trials > 0; }
  void record(bool pass, const std::string& what = {});
};

/// Randomized agreement of the indexed operations with naive word operations, `queries` per operation.
std::vector<Check> index_suite(std::size_t queries, std::uint64_t seed);

/// Randomized checks of the combinatorial lemmas the solver relies on.
std::vector<Check> combinatorics_suite(std::size_t trials, std::uint64_t seed);

/// Evaluation of fuzzed parametric words before and after preprocessing and reduction.
std::vector<Check> parametric_suite(std::size_t families, std::size_t points, std::uint64_t seed);

}  // namespace fgeq::props
