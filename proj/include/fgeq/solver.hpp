#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgeq/equation.hpp"
#include "fgeq/parametric.hpp"

namespace fgeq {

struct SolveConfig {
  long slack = 16;
  long verify_k = 8;
};

/// {nf(alpha w^k beta) : k in Z}
struct Family {
  Word alpha;
  Word w;
  Word beta;
  auto operator<=>(const Family&) const = default;
};

struct SolveStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t finite_considered = 0;
  std::size_t families_considered = 0;
  std::size_t candidates_tested = 0;
  std::size_t singles = 0;  // total size of the candidate sets
  std::size_t collapsed_fragments = 0;
  std::size_t power_fragments = 0;
  std::size_t coefficient_violations = 0;
  std::size_t diag_checks = 0;
  std::size_t diag_violations = 0;
  std::size_t family_samples = 0;
  double elapsed_ms = 0;
};

struct SolutionSet {
  EquationKind kind = EquationKind::proper;  // trivially_true: every word is a solution
  std::vector<Word> finite;
  std::vector<Family> families;
  SolveStats stats;
  std::vector<std::string> diagnostics;

  bool all_words() const { return kind == EquationKind::trivially_true; }
  bool contains(WordView x) const;
};

/// eq must be normalized and proper.
SolutionSet solve(const Equation& eq, const SolveConfig& config = {});
SolutionSet solve(const NormalizedEquation& eq, const SolveConfig& config = {});

Family canonicalize_family(WordView alpha, WordView w, WordView beta);
/// k with nf(alpha w^k beta) = x.
std::optional<long> family_member(const Family& f, WordView x);
bool families_equal(const Family& a, const Family& b);
Word family_word(const Family& f, long k);

}  // namespace fgeq
