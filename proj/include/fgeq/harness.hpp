#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgeq/diff.hpp"
#include "fgeq/properties.hpp"

namespace fgeq::harness {

struct FuzzConfig {
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::uint32_t sigma = 2;
  std::size_t max_m = 5;
  std::size_t max_word_len = 6;
  std::size_t oracle_len = 7;
  long verify_k = 8;
  long slack = 16;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct FuzzItem {
  Equation eq;
  oracle::OracleReport report;
  SolveStats stats;
  std::size_t finite = 0;
  std::size_t families = 0;
  std::vector<std::string> diagnostics;
  std::string error;  // invariant violation message, if any

  bool passed() const { return error.empty() && report.passed() && diagnostics.empty(); }
};

struct FuzzSummary {
  std::vector<FuzzItem> items;
  std::size_t failures = 0;
  std::size_t missing = 0;
  std::size_t spurious = 0;
  std::size_t errors = 0;
  std::size_t diag_checks = 0;
  std::size_t diag_violations = 0;
  double max_output_ratio = 0;  // (finite + families) / n^2
  double max_family_ratio = 0;  // families / n^2
  double elapsed_s = 0;
};

/// The i-th equation of a batch; the batch is a pure function of the config.
Equation fuzz_equation(const FuzzConfig& cfg, std::size_t i);
FuzzSummary run_fuzz(const FuzzConfig& cfg);

struct BenchRow {
  std::size_t n = 0;
  double median_ms = 0;
  std::size_t families = 0;
};

/// Solvable equation with m words of total length about n, built around a hidden periodic word.
Equation bench_equation(std::size_t n, std::size_t m, std::uint64_t seed);
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::size_t m, std::uint64_t seed);
/// Least-squares slope of log(time) against log(n).
double loglog_slope(const std::vector<BenchRow>& rows);

struct KnownAnswer {
  std::string equation;
  std::vector<std::string> finite;
  std::vector<Family> families;
};
const std::vector<KnownAnswer>& known_answers();
props::Check check_known_answers();

/// Every property suite at reduced scale plus a small differential batch.
std::vector<props::Check> selftest(std::size_t scale = 1);

}  // namespace fgeq::harness
