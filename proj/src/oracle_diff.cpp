#include "fgeq/diff.hpp"

#include "fgeq/oracle.hpp"

namespace fgeq::oracle {

OracleReport diff_test(const Equation& eq, const SolutionSet& answer, std::size_t bound, long k, std::uint32_t sigma) {
  OracleReport rep;
  rep.equation = eq;
  rep.bound = bound;
  auto brute = brute_solutions(eq, bound, sigma);
  rep.brute_count = brute.size();
  for (const Word& x : brute)
    if (!answer.contains(x)) rep.missing.push_back(x);
  for (const Word& x : answer.finite)
    if (!is_solution(eq, x)) rep.spurious.push_back(x);
  for (const Family& f : answer.families) {
    for (long t = -k; t <= k; ++t) {
      Word x = family_word(f, t);
      ++rep.family_samples_checked;
      if (!is_solution(eq, x)) rep.spurious.push_back(x);
    }
  }
  return rep;
}

OracleReport diff_test(const Equation& eq, std::size_t bound, long k, std::uint32_t sigma, const SolveConfig& config) {
  return diff_test(eq, solve(eq, config), bound, k, sigma);
}

}  // namespace fgeq::oracle
