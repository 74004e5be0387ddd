#include "fgeq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "fgeq/oracle.hpp"

namespace fgeq::harness {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

FuzzItem fuzz_one(const FuzzConfig& cfg, std::size_t i) {
  FuzzItem item;
  item.eq = fuzz_equation(cfg, i);
  SolveConfig sc;
  sc.slack = cfg.slack;
  sc.verify_k = cfg.verify_k;
  try {
    SolutionSet s = solve(item.eq, sc);
    item.stats = s.stats;
    item.finite = s.finite.size();
    item.families = s.families.size();
    item.diagnostics = s.diagnostics;
    item.report = oracle::diff_test(item.eq, s, cfg.oracle_len, cfg.verify_k, cfg.sigma);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

}  // namespace

Equation fuzz_equation(const FuzzConfig& cfg, std::size_t i) {
  return oracle::random_equation(cfg.sigma, cfg.max_m, cfg.max_word_len, mix(cfg.seed * 0x100000001b3ULL + i));
}

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  FuzzSummary sum;
  sum.items.resize(cfg.count);
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.count;) sum.items[i] = fuzz_one(cfg, i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const FuzzItem& it : sum.items) {
    if (!it.passed()) ++sum.failures;
    if (!it.error.empty()) ++sum.errors;
    sum.missing += it.report.missing.size();
    sum.spurious += it.report.spurious.size();
    sum.diag_checks += it.stats.diag_checks;
    sum.diag_violations += it.stats.diag_violations;
    double n2 = static_cast<double>(std::max<std::size_t>(it.eq.n(), 1));
    n2 *= n2;
    sum.max_output_ratio = std::max(sum.max_output_ratio, static_cast<double>(it.finite + it.families) / n2);
    sum.max_family_ratio = std::max(sum.max_family_ratio, static_cast<double>(it.families) / n2);
  }
  sum.elapsed_s = seconds_since(t0);
  return sum;
}

Equation bench_equation(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto letter = [&] { return static_cast<Letter>(rng() % 4); };
  // z is cyclically reduced, so its powers are reduced.
  Word z;
  while (z.size() < 3 || !is_cyclically_reduced(z) || !is_primitive(z)) {
    z.clear();
    for (int k = 0; k < 3; ++k) z.push_back(letter());
    z = nf(z);
  }
  Equation eq;
  // The closing word is about as long as all the others together.
  std::size_t per = m > 1 ? std::max<std::size_t>((n > m ? n - m : 0) / (2 * (m - 1)), 2) : std::max<std::size_t>(n, 2);
  for (std::size_t i = 0; i < m; ++i) {
    eq.exponents.push_back(i % 2 ? -1 : 1);
    Word w;
    // Long z-powers with short random separators.
    while (w.size() + 2 < per) {
      Word piece = rng() % 2 ? z : involute(z);
      for (std::size_t k = 1 + rng() % 4; k > 0 && w.size() + 2 < per; --k) w.insert(w.end(), piece.begin(), piece.end());
      w.push_back(letter());
      w = nf(w);
    }
    while (w.size() < per) {
      w.push_back(letter());
      w = nf(w);
    }
    eq.words.push_back(w);
  }
  // Close the product on a planted z-periodic solution so that the equation is solvable.
  Word x = z;
  for (int k = 0; k < 3; ++k) x.insert(x.end(), z.begin(), z.end());
  x.push_back(letter());
  x = nf(x);
  eq.words.back().clear();
  eq.words.back() = involute(substitute(eq, x));
  NormalizedEquation ne = normalize(eq);
  return ne.kind == EquationKind::proper ? ne.eq : eq;
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::size_t m, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    Equation eq = bench_equation(n, m, seed + n);
    std::vector<double> times;
    BenchRow row;
    row.n = eq.n();
    for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
      auto t0 = std::chrono::steady_clock::now();
      SolutionSet s = solve(eq);
      times.push_back(seconds_since(t0) * 1000.0);
      row.families = s.families.size();
    }
    std::sort(times.begin(), times.end());
    row.median_ms = times[times.size() / 2];
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(rows.size());
  for (const BenchRow& r : rows) {
    double x = std::log(static_cast<double>(r.n)), y = std::log(std::max(r.median_ms, 1e-6));
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  double den = k * sxx - sx * sx;
  return den == 0 ? 0 : (k * sxy - sx * sy) / den;
}

const std::vector<KnownAnswer>& known_answers() {
  static const std::vector<KnownAnswer> table = {
      {"X a X' A", {}, {{{}, parse_word("a"), {}}}},
      {"X ab X' BA", {}, {{{}, parse_word("ab"), {}}}},
      {"X X", {""}, {}},
      {"X a X' B", {}, {}},
      {"X X a", {}, {}},
  };
  return table;
}

props::Check check_known_answers() {
  props::Check c("known answers");
  for (const KnownAnswer& k : known_answers()) {
    SolutionSet s = solve(read_equation(k.equation));
    std::vector<Word> finite;
    for (const std::string& w : k.finite) finite.push_back(parse_word(w));
    std::vector<Family> fams;
    for (const Family& f : k.families) fams.push_back(canonicalize_family(f.alpha, f.w, f.beta));
    std::sort(fams.begin(), fams.end());
    c.record(s.finite == finite && s.families == fams && s.diagnostics.empty(), k.equation);
  }
  return c;
}

std::vector<props::Check> selftest(std::size_t scale) {
  std::vector<props::Check> out;
  out.push_back(check_known_answers());
  for (auto& v : {props::index_suite(1000 * scale, 1), props::combinatorics_suite(300 * scale, 2),
                  props::parametric_suite(50 * scale, 20, 3)})
    out.insert(out.end(), v.begin(), v.end());
  FuzzConfig cfg;
  cfg.count = 100 * scale;
  cfg.oracle_len = 5;
  cfg.seed = 7;
  FuzzSummary fz = run_fuzz(cfg);
  props::Check diff("differential batch");
  for (const FuzzItem& it : fz.items) diff.record(it.passed(), format_equation(it.eq));
  out.push_back(diff);
  return out;
}

}  // namespace fgeq::harness
